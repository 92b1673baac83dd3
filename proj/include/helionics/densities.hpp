#pragma once

#include "helionics/wavefunctions.hpp"

#include <span>

namespace helionics {

enum class Space { Position, Momentum };
enum class OneNorm { N, Unity };
enum class PairNorm { NNm1, Unity };

std::string space_name(Space s);

// One-electron radial density in either space, evaluated in closed form
// from the orbital pair and its overlaps:
//   rho(x) = pref * [a(x)^2 S_bb + b(x)^2 S_aa + 2 s a(x) b(x) S_ab]
// with pref = 2 C^2 (normalized to N = 2) or C^2 (unity).
struct RadialDensity {
    Space space = Space::Position;
    OneNorm normalization = OneNorm::N;
    TwoElectronState state;
    double prefactor = 0.0;

    double operator()(double x) const;
    void eval(std::span<const double> xs, std::span<double> out) const;
};

// Pair radial density Gamma(x1,x2) = pref * Psi(x1,x2)^2 with pref = 2 for
// the N(N-1) convention and 1 for unity.
struct PairRadialDensity {
    Space space = Space::Position;
    PairNorm normalization = PairNorm::NNm1;
    TwoElectronState state;
    double prefactor = 0.0;

    double operator()(double x1, double x2) const;
    void eval_points(std::span<const double> xs, std::span<const double> ys,
                     std::span<double> out) const;
    /// Row-major tile out[r*cols.size()+c] = Gamma(rows[r], cols[c]).
    void eval_grid(std::span<const double> rows, std::span<const double> cols,
                   std::span<double> out) const;
};

RadialDensity one_density(const TwoElectronState& s, Space space);
PairRadialDensity pair_density(const TwoElectronState& s, Space space);

/// Divides the profile by 2 and switches the tag; applying it to an already
/// unity-normalized density throws NoOpError.
RadialDensity to_unity(const RadialDensity& d);
PairRadialDensity to_unity(const PairRadialDensity& d);

/// Mapping scale for quadrature over this state's densities: densities vary
/// on 1/zeta in position space and on zeta in momentum space.
double quad_scale(const TwoElectronState& s, Space space);

} // namespace helionics
