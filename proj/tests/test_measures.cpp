#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helionics/measures.hpp"

#include "test_support.hpp"

#include <cmath>

using namespace helionics;

namespace {

// hydrogenic 1s entropies at Z = 1, unity densities:
//   S_rho = 3 + ln(pi)                  (from ln pi + 2<r>)
//   S_pi  = 5 ln 2 + 2 ln(pi) - 10/3    (Beta-function reduction of
//                                        <ln(1+p^2)> = 2 ln 2 - 5/6)
const double kSRho1s = 3.0 + std::log(M_PI);
const double kSPi1s = 5.0 * std::log(2.0) + 2.0 * std::log(M_PI) - 10.0 / 3.0;

TwoElectronState hydrogenic_like(double z) {
    // the (zeta = Z, zeta = Z) singlet's unity density equals the
    // hydrogenic 1s density
    return build_state(StateKind::Singlet, z, StateParams{z, z});
}

} // namespace

TEST_CASE("hydrogenic position entropy: 3 + ln pi") {
    const auto rho_u = to_unity(one_density(hydrogenic_like(1.0), Space::Position));
    CHECK(shannon_one(rho_u) == doctest::Approx(kSRho1s).epsilon(1e-9));
}

TEST_CASE("hydrogenic momentum entropy: 5 ln2 + 2 ln pi - 10/3") {
    const auto pi_u = to_unity(one_density(hydrogenic_like(1.0), Space::Momentum));
    CHECK(shannon_one(pi_u) == doctest::Approx(kSPi1s).epsilon(1e-9));
    CHECK(kSPi1s == doctest::Approx(2.42186).epsilon(1e-5));
}

TEST_CASE("one-electron entropy scales as -3 ln Z") {
    const auto s1 = to_unity(one_density(hydrogenic_like(1.0), Space::Position));
    for (double z : {2.0, 5.0, 17.0}) {
        const auto sz = to_unity(one_density(hydrogenic_like(z), Space::Position));
        CHECK(shannon_one(sz) - shannon_one(s1) ==
              doctest::Approx(-3.0 * std::log(z)).epsilon(1e-9));
    }
}

TEST_CASE("shannon_one requires unity normalization") {
    const auto rho_n = one_density(hydrogenic_like(1.0), Space::Position);
    CHECK_THROWS_AS(shannon_one(rho_n), NotUnityNormalizedError);
    const auto gam_n = pair_density(hydrogenic_like(1.0), Space::Position);
    CHECK_THROWS_AS(shannon_two(gam_n), NotUnityNormalizedError);
}

TEST_CASE("product-state pair entropy is twice the one-electron entropy") {
    const auto s = hydrogenic_like(1.6875);
    const double s1 = shannon_one(to_unity(one_density(s, Space::Position)));
    const double s2 = shannon_two(to_unity(pair_density(s, Space::Position)));
    CHECK(s2 == doctest::Approx(2.0 * s1).epsilon(1e-8));
}

TEST_CASE("two-electron entropy scales as -6 ln Z for the NI triplet") {
    const auto a = build_state(StateKind::NonInteractingTriplet, 1.0);
    const auto b = build_state(StateKind::NonInteractingTriplet, 3.0);
    const double sa = shannon_two(to_unity(pair_density(a, Space::Position)));
    const double sb = shannon_two(to_unity(pair_density(b, Space::Position)));
    CHECK(sb - sa == doctest::Approx(-6.0 * std::log(3.0)).epsilon(1e-8));
}

TEST_CASE("mutual information of a product state vanishes in both modes") {
    const auto s = hydrogenic_like(1.6875);
    for (auto space : {Space::Position, Space::Momentum}) {
        const auto pair_u = to_unity(pair_density(s, space));
        const auto one_u = to_unity(one_density(s, space));
        CHECK(std::abs(mutual_information(pair_u, one_u, MiMode::Direct)) < 1e-8);
        CHECK(std::abs(mutual_information(pair_u, one_u,
                                          MiMode::EntropyDifference)) < 1e-8);
    }
}

TEST_CASE("NI triplet mutual information: 0.50 (position) and 0.51 (momentum)") {
    const auto s = build_state(StateKind::NonInteractingTriplet, 2.0);
    const auto r = measure_state(s);
    CHECK(r.i_r == doctest::Approx(0.50).epsilon(0.01));
    CHECK(std::abs(r.i_r - 0.50) <= 0.005);
    CHECK(std::abs(r.i_p - 0.51) <= 0.005);
}

TEST_CASE("direct and entropy-difference modes agree") {
    const std::vector<TwoElectronState> states = {
        build_state(StateKind::NonInteractingTriplet, 2.0),
        build_state(StateKind::Triplet, 2.0, StateParams{1.9936, 0.7755}),
        build_state(StateKind::Singlet, 2.0, StateParams{2.1832, 1.1885}),
    };
    for (const auto& s : states) {
        for (auto space : {Space::Position, Space::Momentum}) {
            const auto pair_u = to_unity(pair_density(s, space));
            const auto one_u = to_unity(one_density(s, space));
            const double direct = mutual_information(pair_u, one_u, MiMode::Direct);
            const double diff =
                mutual_information(pair_u, one_u, MiMode::EntropyDifference);
            CHECK(std::abs(direct - diff) <= 1e-5);
            CHECK(direct >= -1e-9); // KL divergence
        }
    }
}

TEST_CASE("mutual information rejects a mismatched marginal") {
    const auto a = build_state(StateKind::Triplet, 2.0, StateParams{1.99, 0.78});
    const auto b = build_state(StateKind::Singlet, 2.0, StateParams{2.18, 1.19});
    const auto pair_u = to_unity(pair_density(a, Space::Position));
    const auto wrong_one = to_unity(one_density(b, Space::Position));
    CHECK_THROWS_AS(
        mutual_information(pair_u, wrong_one, MiMode::EntropyDifference),
        MarginalMismatchError);
    const auto other_space = to_unity(one_density(a, Space::Momentum));
    CHECK_THROWS_AS(
        mutual_information(pair_u, other_space, MiMode::EntropyDifference),
        MarginalMismatchError);
}

TEST_CASE("measure_state wires the conditional-entropy decomposition") {
    const auto s = build_state(StateKind::Triplet, 2.0, StateParams{1.9936, 0.7755});
    const auto r = measure_state(s);
    CHECK(r.s_cond_r == r.s_gamma_u - r.s_rho_u);
    CHECK(r.i_r == 2.0 * r.s_rho_u - r.s_gamma_u);
    CHECK(r.i_r == r.s_rho_u - r.s_cond_r);
    CHECK(r.entropy_sum_1e == r.s_rho_u + r.s_pi_u);
    // the conditional-entropy form of the information sum
    CHECK(r.i_r + r.i_p ==
          doctest::Approx(r.entropy_sum_1e - (r.s_cond_r + r.s_cond_p))
              .epsilon(1e-12));
}

TEST_CASE("entropy bounds hold for optimized-parameter states") {
    const double bound1 = 3.0 * (1.0 + std::log(M_PI));
    const double bound2 = 6.0 * (1.0 + std::log(M_PI));
    const std::vector<TwoElectronState> states = {
        build_state(StateKind::Singlet, 2.0, StateParams{2.1832, 1.1885}),
        build_state(StateKind::Triplet, 2.0, StateParams{1.9936, 0.7755}),
        build_state(StateKind::NonInteractingTriplet, 2.0),
    };
    for (const auto& s : states) {
        const auto r = measure_state(s);
        CHECK(r.entropy_sum_1e >= bound1 - 1e-6);
        CHECK(r.entropy_sum_2e >= bound2 - 1e-6);
    }
}

TEST_CASE("reference subtraction") {
    CHECK(reference_subtracted(0.50, 0.50) == 0.0);
    CHECK(reference_subtracted(0.58, 0.50) == doctest::Approx(0.08));
}

TEST_CASE("entropy density integrates to the scalar") {
    const auto s = build_state(StateKind::Triplet, 2.0, StateParams{1.9936, 0.7755});
    const auto rho_u = to_unity(one_density(s, Space::Position));
    const double scalar = shannon_one(rho_u);

    // on a quadrature grid, via the grid weights
    const RadialGrid g =
        make_radial_grid(Mapping::Algebraic, 1.0 / s.zeta_min(), 64);
    const ProfileCurve c = entropy_density(rho_u, g.nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        acc += g.weights[i] * c.values[i];
    CHECK(acc == doctest::Approx(scalar).epsilon(1e-6));

    // by the trapezoid rule on the default plotting grid
    const ProfileCurve t = entropy_density(rho_u, default_position_grid());
    CHECK(std::abs(t.trapezoid() - scalar) <= 1e-4 * std::abs(scalar));
}

TEST_CASE("hydrogenic Z=1 entropy density is non-negative everywhere") {
    // rho_max = 1/pi < 1, so the integrand -4 pi r^2 rho ln rho >= 0
    const auto rho_u = to_unity(one_density(hydrogenic_like(1.0), Space::Position));
    const ProfileCurve c = entropy_density(rho_u, default_position_grid());
    for (double v : c.values) CHECK(v >= 0.0);
}

TEST_CASE("radial momentum distribution integrates to N") {
    const auto s = build_state(StateKind::Triplet, 2.0, StateParams{1.9936, 0.7755});
    const ProfileCurve c = radial_momentum(s, default_momentum_grid());
    CHECK(c.trapezoid() == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("information density integrates to the scalar I_p") {
    const auto s = build_state(StateKind::Triplet, 2.0, StateParams{1.9936, 0.7755});
    const auto r = measure_state(s);
    const double integral = info_density_integral(s);
    CHECK(std::abs(integral - r.i_p) <= 1e-4 * std::abs(r.i_p));
    // and the trapezoid of the tabulated curve agrees too
    const ProfileCurve c = info_density_p(s, default_momentum_grid());
    CHECK(std::abs(c.trapezoid() - r.i_p) <= 1e-4 * std::abs(r.i_p));
}

TEST_CASE("product-state information density vanishes pointwise") {
    const auto s = hydrogenic_like(1.6875);
    const auto grid = log_spaced(1e-3, 10.0, 120);
    const ProfileCurve c = info_density_p(s, grid);
    for (double v : c.values) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("log_spaced validates and hits its endpoints") {
    const auto g = log_spaced(1e-3, 10.0, 50);
    CHECK(g.front() == 1e-3);
    CHECK(g.back() == 10.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK_THROWS_AS(log_spaced(-1.0, 10.0, 50), std::invalid_argument);
    CHECK_THROWS_AS(log_spaced(1.0, 10.0, 1), std::invalid_argument);
}
