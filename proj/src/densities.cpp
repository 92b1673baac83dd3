#include "helionics/densities.hpp"

#include <cmath>
#include <vector>

namespace helionics {

std::string space_name(Space s) {
    return s == Space::Position ? "position" : "momentum";
}

namespace {

double orbital_value(const OrbitalCombo& o, Space space, double x) {
    return space == Space::Position ? eval_position(o, x)
                                    : eval_momentum(o, x);
}

void orbital_values(const OrbitalCombo& o, Space space,
                    std::span<const double> xs, std::span<double> out) {
    if (space == Space::Position)
        eval_position(o, xs, out);
    else
        eval_momentum(o, xs, out);
}

} // namespace

double RadialDensity::operator()(double x) const {
    const double a = orbital_value(state.orbital_a, space, x);
    const double b = orbital_value(state.orbital_b, space, x);
    return prefactor * (a * a * state.s_bb + b * b * state.s_aa +
                        2.0 * state.sym_sign * a * b * state.s_ab);
}

void RadialDensity::eval(std::span<const double> xs,
                         std::span<double> out) const {
    const std::size_t n = xs.size();
    std::vector<double> a(n), b(n);
    orbital_values(state.orbital_a, space, xs, a);
    orbital_values(state.orbital_b, space, xs, b);
    const double sbb = state.s_bb, saa = state.s_aa;
    const double sab2 = 2.0 * state.sym_sign * state.s_ab;
    for (std::size_t i = 0; i < n; ++i)
        out[i] = prefactor * (a[i] * a[i] * sbb + b[i] * b[i] * saa +
                              sab2 * a[i] * b[i]);
}

double PairRadialDensity::operator()(double x1, double x2) const {
    const double a1 = orbital_value(state.orbital_a, space, x1);
    const double b1 = orbital_value(state.orbital_b, space, x1);
    const double a2 = orbital_value(state.orbital_a, space, x2);
    const double b2 = orbital_value(state.orbital_b, space, x2);
    const double psi = a1 * b2 + state.sym_sign * b1 * a2;
    return prefactor * state.norm_const * state.norm_const * psi * psi;
}

void PairRadialDensity::eval_points(std::span<const double> xs,
                                    std::span<const double> ys,
                                    std::span<double> out) const {
    const std::size_t n = xs.size();
    std::vector<double> a1(n), b1(n), a2(n), b2(n);
    orbital_values(state.orbital_a, space, xs, a1);
    orbital_values(state.orbital_b, space, xs, b1);
    orbital_values(state.orbital_a, space, ys, a2);
    orbital_values(state.orbital_b, space, ys, b2);
    const double q = prefactor * state.norm_const * state.norm_const;
    const double s = state.sym_sign;
    for (std::size_t i = 0; i < n; ++i) {
        const double psi = a1[i] * b2[i] + s * b1[i] * a2[i];
        out[i] = q * psi * psi;
    }
}

void PairRadialDensity::eval_grid(std::span<const double> rows,
                                  std::span<const double> cols,
                                  std::span<double> out) const {
    const std::size_t nr = rows.size(), nc = cols.size();
    std::vector<double> ar(nr), br(nr), ac(nc), bc(nc);
    orbital_values(state.orbital_a, space, rows, ar);
    orbital_values(state.orbital_b, space, rows, br);
    orbital_values(state.orbital_a, space, cols, ac);
    orbital_values(state.orbital_b, space, cols, bc);
    const double q = prefactor * state.norm_const * state.norm_const;
    const double s = state.sym_sign;
    for (std::size_t r = 0; r < nr; ++r) {
        double* line = out.data() + r * nc;
        const double arv = ar[r], brv = br[r];
        for (std::size_t c = 0; c < nc; ++c) {
            const double psi = arv * bc[c] + s * brv * ac[c];
            line[c] = q * psi * psi;
        }
    }
}

RadialDensity one_density(const TwoElectronState& s, Space space) {
    RadialDensity d;
    d.space = space;
    d.normalization = OneNorm::N;
    d.state = s;
    d.prefactor = 2.0 * s.norm_const * s.norm_const;
    return d;
}

PairRadialDensity pair_density(const TwoElectronState& s, Space space) {
    PairRadialDensity d;
    d.space = space;
    d.normalization = PairNorm::NNm1;
    d.state = s;
    d.prefactor = 2.0;
    return d;
}

RadialDensity to_unity(const RadialDensity& d) {
    if (d.normalization == OneNorm::Unity)
        throw NoOpError("density is already unity normalized");
    RadialDensity u = d;
    u.normalization = OneNorm::Unity;
    u.prefactor = 0.5 * d.prefactor;
    return u;
}

PairRadialDensity to_unity(const PairRadialDensity& d) {
    if (d.normalization == PairNorm::Unity)
        throw NoOpError("pair density is already unity normalized");
    PairRadialDensity u = d;
    u.normalization = PairNorm::Unity;
    u.prefactor = 0.5 * d.prefactor;
    return u;
}

double quad_scale(const TwoElectronState& s, Space space) {
    return space == Space::Position ? 1.0 / s.zeta_min() : s.zeta_max();
}

} // namespace helionics
