#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helionics/series.hpp"

#include "test_support.hpp"

#include <cmath>

using namespace helionics;

TEST_CASE("hydrogenic entropies at Z = 1 and their Z scaling") {
    const auto h1 = hydrogenic_entropies(1.0);
    CHECK(h1.s_rho == doctest::Approx(4.14473).epsilon(1e-5));
    CHECK(h1.s_pi == doctest::Approx(2.42186).epsilon(1e-5));
    const auto h2 = hydrogenic_entropies(2.0);
    CHECK(h2.s_rho - h1.s_rho ==
          doctest::Approx(-3.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(h2.s_pi - h1.s_pi ==
          doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-12));
    // entropy sum is Z-independent and above the one-electron bound
    CHECK(h1.s_rho + h1.s_pi == doctest::Approx(h2.s_rho + h2.s_pi).epsilon(1e-12));
    CHECK(h1.s_rho + h1.s_pi >= 3.0 * (1.0 + std::log(M_PI)));
}

TEST_CASE("hydrogenic ordering flips across Z = 1.33") {
    const auto h1 = hydrogenic_entropies(1.0);
    CHECK(h1.s_rho > h1.s_pi);
    const auto h2 = hydrogenic_entropies(2.0);
    CHECK(h2.s_rho < h2.s_pi);
}

TEST_CASE("hydrogenic crossover near 1.33") {
    const auto c = find_crossover(SeriesKind::Hydrogenic,
                                  CrossQuantity::OneElectronEntropy, 1.0, 2.0,
                                  {1e-5, {}, repulsion_quad_spec()});
    CHECK(std::abs(c.z_star - 1.33) <= 0.01);
    // closed form of the same root
    const auto h1 = hydrogenic_entropies(1.0);
    const double closed = std::exp((h1.s_rho - h1.s_pi) / 6.0);
    CHECK(c.z_star == doctest::Approx(closed).epsilon(1e-4));
    CHECK(c.z_lo == 1.0);
    CHECK(c.z_hi == 2.0);
}

TEST_CASE("hydrogenic series has no two-electron quantities") {
    CHECK_THROWS_AS(find_crossover(SeriesKind::Hydrogenic,
                                   CrossQuantity::TwoElectronEntropy, 1.0, 2.0),
                    std::invalid_argument);
}

TEST_CASE("NI triplet two-electron crossover near 2.50, with closed form") {
    CrossoverOptions opt;
    opt.z_tol = 1e-5;
    const auto c = find_crossover(SeriesKind::NonInteractingTriplet,
                                  CrossQuantity::TwoElectronEntropy, 2.0, 3.0,
                                  opt);
    CHECK(std::abs(c.z_star - 2.50) <= 0.02);
    const auto ni1 = build_state(StateKind::NonInteractingTriplet, 1.0);
    const auto r1 = measure_state(ni1);
    const double closed = std::exp((r1.s_gamma_u - r1.s_pi2_u) / 12.0);
    CHECK(std::abs(c.z_star - closed) <= 1e-3);
}

TEST_CASE("crossover requires a sign change over the bracket") {
    CHECK_THROWS_AS(find_crossover(SeriesKind::Hydrogenic,
                                   CrossQuantity::OneElectronEntropy, 2.0, 3.0),
                    NoSignChangeError);
}

TEST_CASE("small sweep: orderings and reference subtraction") {
    const std::vector<double> zs = {2.0, 3.0, 5.0};
    SweepOptions opt;
    const auto singlet = sweep(StateKind::Singlet, zs, opt);
    REQUIRE(singlet.size() == 3);
    for (const auto& row : singlet) {
        REQUIRE(row.error.empty());
        CHECK(row.report.i_p > row.report.i_r);
        CHECK_FALSE(row.report.i_r_prime.has_value());
    }
    CHECK(singlet[0].report.i_r > singlet[1].report.i_r);
    CHECK(singlet[1].report.i_r > singlet[2].report.i_r);
    CHECK(singlet[0].report.i_p > singlet[1].report.i_p);

    const auto triplet = sweep(StateKind::Triplet, zs, opt);
    for (const auto& row : triplet) {
        REQUIRE(row.error.empty());
        REQUIRE(row.report.i_r_prime.has_value());
        REQUIRE(row.report.i_p_prime.has_value());
        CHECK(*row.report.i_r_prime > *row.report.i_p_prime);
        CHECK(*row.report.i_p_prime > 0.0);
    }
    // order change at Z = 5
    CHECK(triplet[0].report.i_r > triplet[0].report.i_p);
    CHECK(triplet[1].report.i_r > triplet[1].report.i_p);
    CHECK(triplet[2].report.i_p > triplet[2].report.i_r);
}

TEST_CASE("sweep records per-row failures") {
    const std::vector<double> zs = {1.0};
    const auto rows = sweep(StateKind::Triplet, zs, {});
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].error.empty());
}

TEST_CASE("NI reference is constant across the series") {
    const std::vector<double> zs = {2.0, 10.0, 30.0};
    const auto rows = sweep(StateKind::NonInteractingTriplet, zs, {});
    double lo_r = HUGE_VAL, hi_r = -HUGE_VAL, lo_p = HUGE_VAL, hi_p = -HUGE_VAL;
    for (const auto& row : rows) {
        REQUIRE(row.error.empty());
        lo_r = std::min(lo_r, row.report.i_r);
        hi_r = std::max(hi_r, row.report.i_r);
        lo_p = std::min(lo_p, row.report.i_p);
        hi_p = std::max(hi_p, row.report.i_p);
    }
    CHECK(hi_r - lo_r <= 0.005);
    CHECK(hi_p - lo_p <= 0.005);
    CHECK(std::abs(rows[0].report.i_r - 0.50) <= 0.005);
    CHECK(std::abs(rows[0].report.i_p - 0.51) <= 0.005);
    // the +-3 ln Z scalings cancel: the entropy sum is Z-independent
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(rows[i].report.entropy_sum_1e -
                       rows[0].report.entropy_sum_1e) <= 1e-8);
        CHECK(std::abs(rows[i].report.entropy_sum_2e -
                       rows[0].report.entropy_sum_2e) <= 1e-8);
    }
}

TEST_CASE("crossover_from_rows interpolates between bracketing grid points") {
    // synthetic rows with a linear difference crossing at z = 3.25
    std::vector<SweepRow> rows(3);
    for (int i = 0; i < 3; ++i) {
        rows[i].z = 2.0 + i;
        rows[i].report.s_gamma_u = 10.0 - 2.0 * (rows[i].z - 2.0);
        rows[i].report.s_pi2_u = 7.5;
    }
    CHECK(crossover_from_rows(rows, CrossQuantity::TwoElectronEntropy) ==
          doctest::Approx(3.25).epsilon(1e-12));
    // no sign change
    for (auto& r : rows) r.report.s_pi2_u = -100.0;
    CHECK_THROWS_AS(crossover_from_rows(rows, CrossQuantity::TwoElectronEntropy),
                    NoSignChangeError);
}

TEST_CASE("series kind and quantity names round-trip") {
    for (auto k : {SeriesKind::Hydrogenic, SeriesKind::Singlet,
                   SeriesKind::Triplet, SeriesKind::NonInteractingTriplet})
        CHECK(parse_series_kind(series_kind_name(k)) == k);
    for (auto q : {CrossQuantity::OneElectronEntropy,
                   CrossQuantity::TwoElectronEntropy,
                   CrossQuantity::MutualInformation})
        CHECK(parse_quantity(quantity_label(q)) == q);
    CHECK_THROWS_AS(parse_series_kind("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quantity("nope"), std::invalid_argument);
}
