#include "helionics/wavefunctions.hpp"

#include <cmath>
#include <stdexcept>

namespace helionics {

std::string kind_name(StateKind k) {
    switch (k) {
    case StateKind::Singlet:
        return "singlet";
    case StateKind::Triplet:
        return "triplet";
    case StateKind::NonInteractingTriplet:
        return "ni-triplet";
    }
    return "unknown";
}

double TwoElectronState::zeta_min() const {
    return std::min(params.z1, params.z2);
}

double TwoElectronState::zeta_max() const {
    return std::max(params.z1, params.z2);
}

TwoElectronState build_state(StateKind kind, double z_nuclear,
                             std::optional<StateParams> params) {
    if (!(z_nuclear > 0.0))
        throw std::invalid_argument("nuclear charge must be > 0");

    StateParams p;
    if (kind == StateKind::NonInteractingTriplet) {
        p = {z_nuclear, 0.5 * z_nuclear};
        if (params && !(params->z1 == p.z1 && params->z2 == p.z2))
            throw std::invalid_argument(
                "non-interacting triplet params are fixed at (Z, Z/2)");
    } else {
        if (!params)
            throw std::invalid_argument("singlet/triplet require exponents");
        p = *params;
    }
    if (!(p.z1 > 0.0) || !(p.z2 > 0.0))
        throw NonPositiveExponentError("orbital exponents must be > 0");

    TwoElectronState s;
    s.kind = kind;
    s.z_nuclear = z_nuclear;
    s.params = p;
    if (kind == StateKind::Singlet) {
        s.sym_sign = 1;
        s.orbital_a = slater_1s(p.z1);
        s.orbital_b = slater_1s(p.z2);
    } else {
        if (p.z1 == p.z2)
            throw DegenerateTripletError(
                "triplet requires distinct exponents");
        s.sym_sign = -1;
        s.orbital_a = slater_1s(p.z1);
        s.orbital_b = slater_2s_factor(p.z2);
    }

    s.s_aa = overlap(s.orbital_a, s.orbital_a);
    s.s_bb = overlap(s.orbital_b, s.orbital_b);
    s.s_ab = overlap(s.orbital_a, s.orbital_b);
    const double inv_c2 =
        2.0 * (s.s_aa * s.s_bb + s.sym_sign * s.s_ab * s.s_ab);
    if (!(inv_c2 > 0.0))
        throw DegenerateTripletError("orbital pair is linearly dependent");
    s.norm_const = 1.0 / std::sqrt(inv_c2);
    return s;
}

double amplitude(const TwoElectronState& s, double r1, double r2) {
    const double a1 = eval_position(s.orbital_a, r1);
    const double b2 = eval_position(s.orbital_b, r2);
    const double b1 = eval_position(s.orbital_b, r1);
    const double a2 = eval_position(s.orbital_a, r2);
    return s.norm_const * (a1 * b2 + s.sym_sign * b1 * a2);
}

double amplitude_p(const TwoElectronState& s, double p1, double p2) {
    const double a1 = eval_momentum(s.orbital_a, p1);
    const double b2 = eval_momentum(s.orbital_b, p2);
    const double b1 = eval_momentum(s.orbital_b, p1);
    const double a2 = eval_momentum(s.orbital_a, p2);
    return s.norm_const * (a1 * b2 + s.sym_sign * b1 * a2);
}

} // namespace helionics
