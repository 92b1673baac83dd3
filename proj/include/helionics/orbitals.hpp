#pragma once

#include "helionics/errors.hpp"

#include <span>
#include <vector>

namespace helionics {

/// s-type radial primitive r^k e^{-zeta r}, k in {0, 1}.
struct SlaterPrimitive {
    int power = 0;        // k
    double exponent = 1.0; // zeta (1/bohr), > 0

    void validate() const;
};

/// Linear combination of primitives; evaluates to sum_i c_i r^{k_i} e^{-z_i r}.
struct OrbitalCombo {
    struct Term {
        double coeff = 1.0;
        SlaterPrimitive primitive;
    };
    std::vector<Term> terms;

    void validate() const;
};

/// e^{-zeta r}
OrbitalCombo slater_1s(double zeta);

/// (1 - zeta r) e^{-zeta r}: the node-bearing 2s-like factor, exactly the
/// two-term combo with coefficients (1, -zeta).
OrbitalCombo slater_2s_factor(double zeta);

double eval_position(const OrbitalCombo& o, double r);
void eval_position(const OrbitalCombo& o, std::span<const double> r,
                   std::span<double> out);

// Spherical (l=0) transform phi~(p) = sqrt(2/pi) p^-1 int r phi(r) sin(pr) dr,
// in closed form:
//   e^{-zr}   -> 2 sqrt(2/pi) z / (z^2+p^2)^2
//   r e^{-zr} -> 2 sqrt(2/pi) (3z^2 - p^2) / (z^2+p^2)^3
double eval_momentum(const OrbitalCombo& o, double p);
void eval_momentum(const OrbitalCombo& o, std::span<const double> p,
                   std::span<double> out);

/// int_0^inf r^n e^{-s r} dr = n! / s^{n+1}
double gamma_moment(int n, double s);

/// 4*pi int r^2 a(r) b(r) dr by Gamma-function moments. Equal to the
/// momentum-space overlap by unitarity of the transform.
double overlap(const OrbitalCombo& a, const OrbitalCombo& b);

/// <a| -1/2 laplacian |b> = (1/2) 4*pi int r^2 a'(r) b'(r) dr.
double kinetic_energy_integral(const OrbitalCombo& a, const OrbitalCombo& b);

/// 4*pi int r a(r) b(r) dr, i.e. <a| 1/r |b>; multiply by -Z for attraction.
double one_over_r_integral(const OrbitalCombo& a, const OrbitalCombo& b);

/// d/dr of the combo, itself a combo (used by the kinetic integral).
OrbitalCombo derivative(const OrbitalCombo& o);

} // namespace helionics
