#pragma once

#include "helionics/orbitals.hpp"

#include <optional>
#include <string>

namespace helionics {

enum class StateKind { Singlet, Triplet, NonInteractingTriplet };

std::string kind_name(StateKind k);

/// Orbital exponents: (Z1, Z2) for the singlet, (Z1', Z2') for the triplets.
struct StateParams {
    double z1 = 1.0;
    double z2 = 1.0;
};

// Two-electron radial state C_N [a(x1) b(x2) + s b(x1) a(x2)] where a is a
// bare 1s primitive and b is either a 1s primitive (singlet) or the
// node-bearing (1 - Z2' r) e^{-Z2' r} factor (triplets); s = +1 / -1.
struct TwoElectronState {
    StateKind kind = StateKind::Singlet;
    double z_nuclear = 2.0;
    OrbitalCombo orbital_a;
    OrbitalCombo orbital_b;
    int sym_sign = 1;
    double norm_const = 0.0; // C_N with <Psi|Psi> = 1
    StateParams params;

    // overlaps of the orbital pair; identical in momentum space by unitarity
    double s_aa = 0.0, s_bb = 0.0, s_ab = 0.0;

    double zeta_min() const;
    double zeta_max() const;
};

/// Builds a normalized state. The non-interacting triplet takes params
/// (Z, Z/2) and rejects anything else; a triplet with Z1' = Z2' throws
/// DegenerateTripletError; non-positive exponents throw
/// NonPositiveExponentError.
TwoElectronState build_state(StateKind kind, double z_nuclear,
                             std::optional<StateParams> params = std::nullopt);

double amplitude(const TwoElectronState& s, double r1, double r2);
double amplitude_p(const TwoElectronState& s, double p1, double p2);

} // namespace helionics
