#pragma once

#include "helionics/errors.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace helionics {

struct QuadSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_panels = 4096;

    void validate() const;
};

// Transformations of [0,inf) onto the unit interval. The algebraic stretch
// x = L*t/(1-t) handles both exponential and rational tails; the exponential
// map x = -L*ln(1-t) is the cross-check scheme for exponentially decaying
// integrands.
enum class Mapping { Algebraic, Exponential };

struct RadialGrid {
    std::vector<double> nodes;   // strictly increasing, all > 0
    std::vector<double> weights; // all > 0, same length as nodes
    std::string mapping_id;
    int panel_count = 0;
    double declared_tol = 1e-9;

    // Checks the structural invariants and that the grid integrates e^-x
    // to 1 within declared_tol. Throws helionics::Error on violation.
    void validate() const;
};

RadialGrid make_radial_grid(Mapping mapping, double scale, int panels,
                            int order = 16);

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // |I(2n panels) - I(n panels)|
    int panels = 0;     // panels per axis at acceptance
};

/// Batch integrand: fill out[i] = f(x[i]).
using BatchFn =
    std::function<void(std::span<const double>, std::span<double>)>;

BatchFn batch_from_scalar(std::function<double(double)> f);

struct QuadOptions {
    Mapping mapping = Mapping::Algebraic;
    double scale = 1.0; // L of the mapping
    int order = 16;
    int initial_panels = 8;
};

/// Integral of f over (0, inf) by composite Gauss-Legendre under the mapped
/// grid, doubling panels until |I(2n)-I(n)| <= max(abs_tol, rel_tol*|I|).
/// Throws NonConvergenceError when max_panels is reached first.
QuadResult integrate_radial(const BatchFn& f, const QuadSpec& spec,
                            const QuadOptions& opt = {});

// Bivariate integrand over (0,inf)^2. eval_grid fills a row-major tile
// out[r*cols.size()+c] = f(rows[r], cols[c]); eval_points handles arbitrary
// point pairs (used for the diagonal triangle blocks).
struct PairIntegrand {
    std::function<void(std::span<const double> rows,
                       std::span<const double> cols, std::span<double> out)>
        eval_grid;
    std::function<void(std::span<const double> xs, std::span<const double> ys,
                       std::span<double> out)>
        eval_points;
};

PairIntegrand pair_from_scalar(std::function<double(double, double)> f);

/// Tensor product of the 1D rule over both axes, with each diagonal panel
/// block integrated as two triangles so that integrands with a kink or a
/// zero line along x = y keep their convergence rate.
QuadResult integrate_pair(const PairIntegrand& f, const QuadSpec& spec,
                          const QuadOptions& opt = {});

/// Bisection: returns the midpoint of a bracket of width <= tol.
/// Throws NoSignChangeError if g(lo) and g(hi) have the same sign.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol);

std::span<const double> gauss_legendre_nodes(int order);
std::span<const double> gauss_legendre_weights(int order);

} // namespace helionics
