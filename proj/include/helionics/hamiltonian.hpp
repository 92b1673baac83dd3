#pragma once

#include "helionics/densities.hpp"
#include "helionics/quadrature.hpp"

#include <optional>

namespace helionics {

struct EnergyBreakdown {
    double kinetic = 0.0;            // > 0
    double nuclear_attraction = 0.0; // < 0
    double electron_repulsion = 0.0;
    double total = 0.0;
};

/// Quadrature settings for the <1/r12> pair integral. Tight enough that the
/// energy surface is smooth on the optimizer's termination scale.
QuadSpec repulsion_quad_spec();

/// Expectation of H = -1/2 (lap1 + lap2) - Z/r1 - Z/r2 + 1/r12 for a
/// normalized state. Kinetic and nuclear terms come from Gamma-moment
/// closed forms; the repulsion uses the l=0 kernel
///   <1/r12> = (4 pi)^2 int int r1^2 r2^2 Psi^2 / max(r1,r2) dr1 dr2
/// evaluated by the pair rule (only the monopole term survives for
/// spherical pair densities).
EnergyBreakdown energy(const TwoElectronState& s,
                       const QuadSpec& repulsion_spec = repulsion_quad_spec());

struct OptimizationResult {
    StateParams params;
    EnergyBreakdown energy;
    int iterations = 0;
    bool converged = false;
};

StateParams default_initial_params(StateKind kind, double z_nuclear);

/// Nelder-Mead minimization of the total energy over the two exponents
/// (reflection/expansion/contraction/shrink = 1, 2, 0.5, 0.5), one restart
/// from the best vertex, exponents kept positive by mirroring. Convergence:
/// simplex diameter < 1e-7 and energy spread < 1e-10. Throws
/// NoBoundStateError when the optimum lies at or above the He+-like
/// threshold -Z^2/2, and NonConvergenceError past 2000 evaluations. The
/// non-interacting triplet returns its fixed (Z, Z/2) reference unoptimized.
OptimizationResult optimize(StateKind kind, double z_nuclear,
                            std::optional<StateParams> initial = std::nullopt,
                            const QuadSpec& repulsion_spec = repulsion_quad_spec());

} // namespace helionics
