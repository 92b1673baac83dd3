#pragma once

#include "helionics/hamiltonian.hpp"
#include "helionics/measures.hpp"

#include <string>
#include <vector>

namespace helionics {

/// Families swept over the continuous nuclear charge.
enum class SeriesKind { Hydrogenic, Singlet, Triplet, NonInteractingTriplet };

std::string series_kind_name(SeriesKind k);
SeriesKind parse_series_kind(const std::string& name);

/// One-electron hydrogenic entropies: S_rho(Z) = 3 + ln pi - 3 ln Z and
/// S_pi(Z) = S_pi(1) + 3 ln Z, with S_pi(1) evaluated once by quadrature
/// and cached.
struct HydrogenicEntropies {
    double s_rho = 0.0;
    double s_pi = 0.0;
};
HydrogenicEntropies hydrogenic_entropies(double z);

struct SweepRow {
    double z = 0.0;
    StateKind kind = StateKind::Singlet;
    StateParams params;
    EnergyBreakdown energy;
    MeasureReport report;
    std::string error; // empty when the row succeeded
};

struct SweepOptions {
    MeasureSpecs specs;
    QuadSpec repulsion = repulsion_quad_spec();
    bool parallel = true;
};

/// Optimize + measure each Z. Triplet rows also carry the reference-
/// subtracted mutual informations against the non-interacting triplet at
/// the same Z. Per-row failures are recorded in SweepRow::error.
std::vector<SweepRow> sweep(StateKind kind, std::span<const double> z_values,
                            const SweepOptions& opt = {});

enum class CrossQuantity {
    OneElectronEntropy, // S_rho^u - S_pi^u
    TwoElectronEntropy, // S_Gamma^u - S_Pi^u
    MutualInformation,  // I_r - I_p
};

std::string quantity_label(CrossQuantity q);
CrossQuantity parse_quantity(const std::string& name);

struct CrossoverResult {
    CrossQuantity quantity = CrossQuantity::OneElectronEntropy;
    SeriesKind kind = SeriesKind::Hydrogenic;
    double z_star = 0.0;
    double z_lo = 0.0, z_hi = 0.0; // input bracket
};

struct CrossoverOptions {
    double z_tol = 1e-3;
    MeasureSpecs specs;
    QuadSpec repulsion = repulsion_quad_spec();
};

/// Bisection on the signed position-minus-momentum difference over the
/// continuous nuclear charge. Interacting kinds re-optimize at every probe
/// Z, warm-starting from the nearest already-optimized probe.
CrossoverResult find_crossover(SeriesKind kind, CrossQuantity quantity,
                               double z_lo, double z_hi,
                               const CrossoverOptions& opt = {});

/// Crossover read off tabulated sweep rows by linear interpolation between
/// the bracketing grid points (how figure data gets interpolated). Rows must
/// be sorted by Z. Throws NoSignChangeError when the difference never
/// changes sign.
double crossover_from_rows(std::span<const SweepRow> rows,
                           CrossQuantity quantity);

} // namespace helionics
