#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helionics/orbitals.hpp"
#include "helionics/quadrature.hpp"

#include "test_support.hpp"

#include <cmath>

using namespace helionics;
using testsupport::hankel_j0_oracle;
using testsupport::overlap_oracle;

TEST_CASE("position evaluation") {
    CHECK(eval_position(slater_1s(1.0), 0.0) == 1.0);
    CHECK(eval_position(slater_2s_factor(1.0), 1.0) == doctest::Approx(0.0));
    CHECK(eval_position(slater_1s(2.0), 1.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("batch position evaluation matches pointwise") {
    const OrbitalCombo o = slater_2s_factor(1.7);
    std::vector<double> rs = {0.0, 0.1, 0.5, 1.0, 2.5, 7.0, 30.0};
    std::vector<double> out(rs.size());
    eval_position(o, rs, out);
    for (std::size_t i = 0; i < rs.size(); ++i)
        CHECK(out[i] == doctest::Approx(eval_position(o, rs[i])).epsilon(1e-13));
}

TEST_CASE("momentum closed forms at p=0") {
    CHECK(eval_momentum(slater_1s(1.0), 0.0) ==
          doctest::Approx(2.0 * std::sqrt(2.0 / M_PI)).epsilon(1e-14));
    OrbitalCombo r_slater;
    r_slater.terms.push_back({1.0, {1, 1.0}});
    CHECK(eval_momentum(r_slater, 0.0) ==
          doctest::Approx(6.0 * std::sqrt(2.0 / M_PI)).epsilon(1e-14));
}

TEST_CASE("the node-bearing combo transform vanishes at p = zeta") {
    for (double zeta : {0.6, 1.0, 2.3}) {
        const OrbitalCombo o = slater_2s_factor(zeta);
        CHECK(std::abs(eval_momentum(o, zeta)) < 1e-15);
        // closed combo form 4 sqrt(2/pi) zeta (p^2 - zeta^2)/(zeta^2+p^2)^3
        const double p = 1.7 * zeta;
        const double d = zeta * zeta + p * p;
        CHECK(eval_momentum(o, p) ==
              doctest::Approx(4.0 * std::sqrt(2.0 / M_PI) * zeta *
                              (p * p - zeta * zeta) / (d * d * d))
                  .epsilon(1e-13));
    }
}

TEST_CASE("momentum transforms agree with the numerical j0 oracle") {
    for (int k : {0, 1}) {
        for (double zeta : {0.7, 1.0, 3.1}) {
            OrbitalCombo o;
            o.terms.push_back({1.0, {k, zeta}});
            for (double p : {0.1, 1.0, 5.0}) {
                const double closed = eval_momentum(o, p);
                const double oracle = hankel_j0_oracle(o, p);
                CHECK(std::abs(closed - oracle) <=
                      1e-8 * std::max(1.0, std::abs(closed)));
            }
        }
    }
}

TEST_CASE("overlap closed forms") {
    CHECK(overlap(slater_1s(1.0), slater_1s(1.0)) ==
          doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(overlap(slater_1s(2.0), slater_1s(2.0)) ==
          doctest::Approx(M_PI / 8.0).epsilon(1e-14));
    OrbitalCombo r_slater;
    r_slater.terms.push_back({1.0, {1, 1.0}});
    CHECK(overlap(slater_1s(1.0), r_slater) ==
          doctest::Approx(1.5 * M_PI).epsilon(1e-14));
}

TEST_CASE("primitive norms match their closed forms by quadrature") {
    for (double zeta : {0.4, 1.0, 2.7}) {
        const double s0 = overlap(slater_1s(zeta), slater_1s(zeta));
        CHECK(s0 == doctest::Approx(M_PI / std::pow(zeta, 3)).epsilon(1e-14));
        OrbitalCombo k1;
        k1.terms.push_back({1.0, {1, zeta}});
        const double s1 = overlap(k1, k1);
        CHECK(s1 == doctest::Approx(3.0 * M_PI / std::pow(zeta, 5)).epsilon(1e-14));
        CHECK(overlap_oracle(slater_1s(zeta), slater_1s(zeta)) ==
              doctest::Approx(s0).epsilon(1e-9));
        CHECK(overlap_oracle(k1, k1) == doctest::Approx(s1).epsilon(1e-9));
    }
}

TEST_CASE("Parseval per orbital for randomized exponents") {
    auto rng = testsupport::seeded_rng();
    std::uniform_real_distribution<double> uz(0.3, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double zeta = uz(rng);
        const int k = trial % 2;
        OrbitalCombo o;
        o.terms.push_back({1.0, {k, zeta}});
        const double pos_norm = overlap(o, o);
        BatchFn f = [&o](std::span<const double> ps, std::span<double> out) {
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const double v = eval_momentum(o, ps[i]);
                out[i] = 4.0 * M_PI * ps[i] * ps[i] * v * v;
            }
        };
        QuadOptions opt;
        opt.scale = zeta;
        const double mom_norm = integrate_radial(f, {1e-10, 1e-13, 4096}, opt).value;
        CHECK(std::abs(mom_norm - pos_norm) <= 1e-8 * pos_norm);
    }
}

TEST_CASE("<p^2> in momentum space equals twice the kinetic integral") {
    auto rng = testsupport::seeded_rng();
    std::uniform_real_distribution<double> uz(0.3, 10.0);
    for (int trial = 0; trial < 12; ++trial) {
        const double zeta = uz(rng);
        OrbitalCombo o;
        if (trial % 3 == 2) {
            o = slater_2s_factor(zeta);
        } else {
            o.terms.push_back({1.0, {trial % 3, zeta}});
        }
        const double t = kinetic_energy_integral(o, o);
        BatchFn f = [&o](std::span<const double> ps, std::span<double> out) {
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const double v = eval_momentum(o, ps[i]);
                out[i] = 4.0 * M_PI * std::pow(ps[i], 4) * v * v;
            }
        };
        QuadOptions opt;
        opt.scale = zeta;
        const double p2 = integrate_radial(f, {1e-10, 1e-13, 4096}, opt).value;
        CHECK(std::abs(p2 - 2.0 * t) <= 1e-7 * std::abs(p2));
    }
}

TEST_CASE("kinetic integral is symmetric") {
    const OrbitalCombo a = slater_1s(1.3);
    const OrbitalCombo b = slater_2s_factor(0.8);
    CHECK(kinetic_energy_integral(a, b) ==
          doctest::Approx(kinetic_energy_integral(b, a)).epsilon(1e-15));
}

TEST_CASE("gamma_moment equals n!/s^(n+1)") {
    CHECK(gamma_moment(2, 2.0) == doctest::Approx(2.0 / 8.0).epsilon(1e-15));
    CHECK(gamma_moment(4, 1.5) ==
          doctest::Approx(24.0 / std::pow(1.5, 5)).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_moment(2, -1.0), std::invalid_argument);
}

TEST_CASE("the 2s-like factor is exactly the (1, -zeta) two-term combo") {
    const OrbitalCombo o = slater_2s_factor(0.9);
    REQUIRE(o.terms.size() == 2);
    CHECK(o.terms[0].coeff == 1.0);
    CHECK(o.terms[0].primitive.power == 0);
    CHECK(o.terms[1].coeff == -0.9);
    CHECK(o.terms[1].primitive.power == 1);
    CHECK(o.terms[0].primitive.exponent == o.terms[1].primitive.exponent);
}

TEST_CASE("validation rejects bad primitives") {
    SlaterPrimitive bad_power{2, 1.0};
    CHECK_THROWS_AS(bad_power.validate(), std::invalid_argument);
    SlaterPrimitive bad_zeta{0, -1.0};
    CHECK_THROWS_AS(bad_zeta.validate(), NonPositiveExponentError);
    OrbitalCombo empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}
