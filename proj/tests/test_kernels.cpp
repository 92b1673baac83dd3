#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helionics/kernels.hpp"

#include "test_support.hpp"

#include <cmath>
#include <vector>

using namespace helionics;

namespace {

double ulp_distance(double a, double b) {
    if (a == b) return 0.0;
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) / (scale * 2.220446049250313e-16);
}

} // namespace

TEST_CASE("vexp matches libm within a few ulp") {
    auto rng = testsupport::seeded_rng();
    std::uniform_real_distribution<double> u(-700.0, 700.0);
    std::vector<double> x(40001), y(40001);
    for (auto& v : x) v = u(rng);
    x[0] = 0.0;
    x[1] = 1.0;
    x[2] = -1.0;
    kernels::vexp(x, y);
    CHECK(y[0] == 1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        worst = std::max(worst, ulp_distance(y[i], std::exp(x[i])));
    CHECK(worst < 4.0);
}

TEST_CASE("vexp clamps its domain") {
    std::vector<double> x = {-1e4, 1e4};
    std::vector<double> y(2);
    kernels::vexp(x, y);
    CHECK(y[0] == doctest::Approx(std::exp(-708.0)).epsilon(1e-12));
    CHECK(y[1] == doctest::Approx(std::exp(708.0)).epsilon(1e-12));
}

TEST_CASE("vlog matches libm within a few ulp") {
    auto rng = testsupport::seeded_rng();
    std::uniform_real_distribution<double> mag(-300.0, 300.0);
    std::vector<double> x(40001), y(40001);
    for (auto& v : x) v = std::pow(10.0, mag(rng));
    x[0] = 1.0;
    kernels::vlog(x, y);
    CHECK(y[0] == 0.0);
    double worst = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double ref = std::log(x[i]);
        worst = std::max(worst, std::abs(y[i] - ref) /
                                    (std::abs(ref) * 2.22e-16 + 1e-300));
    }
    CHECK(worst < 8.0);
}

TEST_CASE("vxlogx floors tiny densities to zero") {
    std::vector<double> x = {0.0, 1e-301, kernels::kDensityFloor, 0.5, 2.0, -3.0};
    std::vector<double> y(x.size());
    kernels::vxlogx(x, y);
    CHECK(y[0] == 0.0);
    CHECK(y[1] == 0.0);
    CHECK(y[2] == doctest::Approx(kernels::kDensityFloor *
                                  std::log(kernels::kDensityFloor)));
    CHECK(y[3] == doctest::Approx(0.5 * std::log(0.5)).epsilon(1e-14));
    CHECK(y[4] == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(y[5] == 0.0); // negative input lands under the floor
}

TEST_CASE("dot and dot3 agree with a long-double reference") {
    auto rng = testsupport::seeded_rng();
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {1u, 3u, 4u, 17u, 1024u, 4097u}) {
        std::vector<double> a(n), b(n), c(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = u(rng);
            b[i] = u(rng);
            c[i] = u(rng);
        }
        long double ref2 = 0.0L, ref3 = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            ref2 += static_cast<long double>(a[i]) * b[i];
            ref3 += static_cast<long double>(a[i]) * b[i] * c[i];
        }
        CHECK(kernels::dot(a, b) ==
              doctest::Approx(static_cast<double>(ref2)).epsilon(1e-13));
        CHECK(kernels::dot3(a, b, c) ==
              doctest::Approx(static_cast<double>(ref3)).epsilon(1e-13));
    }
}

TEST_CASE("pairwise_sum is exact on integers and deterministic") {
    std::vector<double> x(1000);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = double(i % 7) - 3.0;
    const double s1 = kernels::pairwise_sum(x);
    const double s2 = kernels::pairwise_sum(x);
    CHECK(s1 == s2);
    long double ref = 0.0L;
    for (double v : x) ref += v;
    CHECK(s1 == doctest::Approx(static_cast<double>(ref)));
}

TEST_CASE("scalar and AVX2 backends are bit-identical") {
    if (!kernels::cpu_has_avx2()) {
        MESSAGE("no AVX2 on this CPU; skipping equivalence check");
        return;
    }
    auto rng = testsupport::seeded_rng();
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (std::size_t n : {5u, 64u, 257u, 10000u}) {
        std::vector<double> x(n), pos(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = u(rng);
            pos[i] = std::exp(u(rng) * 0.5); // spread over many binades
            w[i] = u(rng);
        }
        std::vector<double> es(n), ev(n), ls(n), lv(n), xs(n), xv(n);

        kernels::set_backend(kernels::Backend::Scalar);
        kernels::vexp(x, es);
        kernels::vlog(pos, ls);
        kernels::vxlogx(pos, xs);
        const double ds = kernels::dot(w, pos);
        const double ts = kernels::dot3(w, pos, x);

        kernels::set_backend(kernels::Backend::Avx2);
        kernels::vexp(x, ev);
        kernels::vlog(pos, lv);
        kernels::vxlogx(pos, xv);
        const double dv = kernels::dot(w, pos);
        const double tv = kernels::dot3(w, pos, x);

        kernels::set_backend(kernels::Backend::Auto);

        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(es[i] == ev[i]);
            REQUIRE(ls[i] == lv[i]);
            REQUIRE(xs[i] == xv[i]);
        }
        CHECK(ds == dv);
        CHECK(ts == tv);
    }
}

TEST_CASE("backend dispatch reports a valid active backend") {
    const auto b = kernels::active_backend();
    CHECK((b == kernels::Backend::Scalar || b == kernels::Backend::Avx2));
    CHECK(kernels::backend_name(b).size() > 0);
    if (!kernels::cpu_has_avx2())
        CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::Avx2),
                        std::invalid_argument);
}
