#include "helionics/orbitals.hpp"

#include "helionics/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace helionics {

namespace {

constexpr double kFactorial[] = {1.0,    1.0,     2.0,      6.0,
                                 24.0,   120.0,   720.0,    5040.0,
                                 40320.0, 362880.0, 3628800.0};

const double kSqrt2OverPi = std::sqrt(2.0 / M_PI);

} // namespace

void SlaterPrimitive::validate() const {
    if (power != 0 && power != 1)
        throw std::invalid_argument("primitive power must be 0 or 1");
    if (!(exponent > 0.0))
        throw NonPositiveExponentError("primitive exponent must be > 0");
}

void OrbitalCombo::validate() const {
    if (terms.empty()) throw std::invalid_argument("empty orbital combo");
    for (const auto& t : terms) t.primitive.validate();
}

OrbitalCombo slater_1s(double zeta) {
    OrbitalCombo o;
    o.terms.push_back({1.0, {0, zeta}});
    o.validate();
    return o;
}

OrbitalCombo slater_2s_factor(double zeta) {
    OrbitalCombo o;
    o.terms.push_back({1.0, {0, zeta}});
    o.terms.push_back({-zeta, {1, zeta}});
    o.validate();
    return o;
}

double eval_position(const OrbitalCombo& o, double r) {
    double v = 0.0;
    for (const auto& t : o.terms) {
        const double radial = t.primitive.power == 0 ? 1.0 : r;
        v += t.coeff * radial * std::exp(-t.primitive.exponent * r);
    }
    return v;
}

void eval_position(const OrbitalCombo& o, std::span<const double> r,
                   std::span<double> out) {
    const std::size_t n = r.size();
    std::fill(out.begin(), out.end(), 0.0);
    std::vector<double> arg(n), ex(n);
    for (const auto& t : o.terms) {
        for (std::size_t i = 0; i < n; ++i)
            arg[i] = -t.primitive.exponent * r[i];
        kernels::vexp(arg, ex);
        if (t.primitive.power == 0) {
            for (std::size_t i = 0; i < n; ++i) out[i] += t.coeff * ex[i];
        } else {
            for (std::size_t i = 0; i < n; ++i)
                out[i] += t.coeff * r[i] * ex[i];
        }
    }
}

namespace {

inline double momentum_primitive(const SlaterPrimitive& prim, double p) {
    const double z = prim.exponent;
    const double d = z * z + p * p;
    if (prim.power == 0) return 2.0 * kSqrt2OverPi * z / (d * d);
    return 2.0 * kSqrt2OverPi * (3.0 * z * z - p * p) / (d * d * d);
}

} // namespace

double eval_momentum(const OrbitalCombo& o, double p) {
    double v = 0.0;
    for (const auto& t : o.terms) v += t.coeff * momentum_primitive(t.primitive, p);
    return v;
}

void eval_momentum(const OrbitalCombo& o, std::span<const double> p,
                   std::span<double> out) {
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = eval_momentum(o, p[i]);
}

double gamma_moment(int n, double s) {
    if (n < 0 || n > 10) throw std::invalid_argument("gamma_moment order out of range");
    if (!(s > 0.0)) throw std::invalid_argument("gamma_moment decay must be > 0");
    return kFactorial[n] / std::pow(s, n + 1);
}

double overlap(const OrbitalCombo& a, const OrbitalCombo& b) {
    double v = 0.0;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            v += ta.coeff * tb.coeff *
                 gamma_moment(2 + ta.primitive.power + tb.primitive.power,
                              ta.primitive.exponent + tb.primitive.exponent);
    return 4.0 * M_PI * v;
}

OrbitalCombo derivative(const OrbitalCombo& o) {
    OrbitalCombo d;
    for (const auto& t : o.terms) {
        const double z = t.primitive.exponent;
        if (t.primitive.power == 0) {
            d.terms.push_back({-t.coeff * z, {0, z}});
        } else {
            d.terms.push_back({t.coeff, {0, z}});
            d.terms.push_back({-t.coeff * z, {1, z}});
        }
    }
    return d;
}

double kinetic_energy_integral(const OrbitalCombo& a, const OrbitalCombo& b) {
    return 0.5 * overlap(derivative(a), derivative(b));
}

double one_over_r_integral(const OrbitalCombo& a, const OrbitalCombo& b) {
    double v = 0.0;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            v += ta.coeff * tb.coeff *
                 gamma_moment(1 + ta.primitive.power + tb.primitive.power,
                              ta.primitive.exponent + tb.primitive.exponent);
    return 4.0 * M_PI * v;
}

} // namespace helionics
