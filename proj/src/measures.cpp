#include "helionics/measures.hpp"

#include "helionics/kernels.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace helionics {

namespace {

constexpr double kFourPi = 4.0 * M_PI;
constexpr double kFloor = kernels::kDensityFloor;

void require_unity(const RadialDensity& d) {
    if (d.normalization != OneNorm::Unity)
        throw NotUnityNormalizedError("one-density must be unity normalized");
}

void require_unity(const PairRadialDensity& d) {
    if (d.normalization != PairNorm::Unity)
        throw NotUnityNormalizedError("pair density must be unity normalized");
}

} // namespace

double shannon_one(const RadialDensity& d, const QuadSpec& spec) {
    require_unity(d);
    BatchFn f = [&d](std::span<const double> xs, std::span<double> out) {
        const std::size_t n = xs.size();
        std::vector<double> dens(n), xl(n);
        d.eval(xs, dens);
        kernels::vxlogx(dens, xl);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = -kFourPi * xs[i] * xs[i] * xl[i];
    };
    QuadOptions opt;
    opt.scale = quad_scale(d.state, d.space);
    return integrate_radial(f, spec, opt).value;
}

double shannon_two(const PairRadialDensity& d, const QuadSpec& spec) {
    require_unity(d);
    PairIntegrand f;
    f.eval_grid = [&d](std::span<const double> rows,
                       std::span<const double> cols, std::span<double> out) {
        const std::size_t nr = rows.size(), nc = cols.size();
        std::vector<double> gamma(nr * nc), xl(nr * nc), colf(nc);
        d.eval_grid(rows, cols, gamma);
        kernels::vxlogx(gamma, xl);
        for (std::size_t c = 0; c < nc; ++c)
            colf[c] = kFourPi * cols[c] * cols[c];
        for (std::size_t r = 0; r < nr; ++r) {
            const double rowf = -kFourPi * rows[r] * rows[r];
            double* line = out.data() + r * nc;
            const double* xline = xl.data() + r * nc;
            for (std::size_t c = 0; c < nc; ++c)
                line[c] = rowf * colf[c] * xline[c];
        }
    };
    f.eval_points = [&d](std::span<const double> xs,
                         std::span<const double> ys, std::span<double> out) {
        const std::size_t n = xs.size();
        std::vector<double> gamma(n), xl(n);
        d.eval_points(xs, ys, gamma);
        kernels::vxlogx(gamma, xl);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = -kFourPi * xs[i] * xs[i] * kFourPi * ys[i] * ys[i] * xl[i];
    };
    QuadOptions opt;
    opt.scale = quad_scale(d.state, d.space);
    return integrate_pair(f, spec, opt).value;
}

namespace {

// 4*pi int y^2 pair(x, y) dy at fixed x.
double marginal_at(const PairRadialDensity& pair, double x,
                   const QuadSpec& spec) {
    BatchFn f = [&pair, x](std::span<const double> ys, std::span<double> out) {
        const std::size_t n = ys.size();
        std::vector<double> xs(n, x), g(n);
        pair.eval_points(xs, ys, g);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = kFourPi * ys[i] * ys[i] * g[i];
    };
    QuadOptions opt;
    opt.scale = quad_scale(pair.state, pair.space);
    return integrate_radial(f, spec, opt).value;
}

void check_marginal(const PairRadialDensity& pair, const RadialDensity& one,
                    const QuadSpec& spec) {
    if (pair.space != one.space)
        throw MarginalMismatchError("pair and one densities live in different spaces");
    // probe points scaled into the density's bulk
    const double unit = pair.space == Space::Position
                            ? 1.0 / pair.state.zeta_min()
                            : pair.state.zeta_max();
    for (double base : {0.2, 1.0, 3.0}) {
        const double x = base * unit;
        const double m = marginal_at(pair, x, spec);
        const double rho = one(x);
        if (std::abs(m - rho) > 1e-6 * std::max({std::abs(rho), std::abs(m), 1e-12})) {
            std::ostringstream os;
            os << "marginal of pair density deviates from one-density at x="
               << x << " (" << m << " vs " << rho << ")";
            throw MarginalMismatchError(os.str());
        }
    }
}

double mutual_information_direct(const PairRadialDensity& pair,
                                 const RadialDensity& one,
                                 const QuadSpec& spec) {
    PairIntegrand f;
    f.eval_grid = [&pair, &one](std::span<const double> rows,
                                std::span<const double> cols,
                                std::span<double> out) {
        const std::size_t nr = rows.size(), nc = cols.size();
        std::vector<double> gamma(nr * nc), lg(nr * nc);
        std::vector<double> rho_r(nr), rho_c(nc), lrho_r(nr), lrho_c(nc);
        std::vector<double> colf(nc);
        pair.eval_grid(rows, cols, gamma);
        one.eval(rows, rho_r);
        one.eval(cols, rho_c);
        for (auto& v : rho_r) v = std::max(v, kFloor);
        for (auto& v : rho_c) v = std::max(v, kFloor);
        kernels::vlog(rho_r, lrho_r);
        kernels::vlog(rho_c, lrho_c);
        std::vector<double> floored(gamma);
        for (auto& v : floored) v = std::max(v, kFloor);
        kernels::vlog(floored, lg);
        for (std::size_t c = 0; c < nc; ++c)
            colf[c] = kFourPi * cols[c] * cols[c];
        for (std::size_t r = 0; r < nr; ++r) {
            const double rowf = kFourPi * rows[r] * rows[r];
            double* line = out.data() + r * nc;
            const double* g = gamma.data() + r * nc;
            const double* lgr = lg.data() + r * nc;
            for (std::size_t c = 0; c < nc; ++c) {
                if (g[c] < kFloor) {
                    line[c] = 0.0;
                } else {
                    line[c] = rowf * colf[c] * g[c] *
                              (lgr[c] - lrho_r[r] - lrho_c[c]);
                }
            }
        }
    };
    f.eval_points = [&pair, &one](std::span<const double> xs,
                                  std::span<const double> ys,
                                  std::span<double> out) {
        const std::size_t n = xs.size();
        std::vector<double> gamma(n), lg(n), rx(n), ry(n), lrx(n), lry(n);
        pair.eval_points(xs, ys, gamma);
        one.eval(xs, rx);
        one.eval(ys, ry);
        for (auto& v : rx) v = std::max(v, kFloor);
        for (auto& v : ry) v = std::max(v, kFloor);
        kernels::vlog(rx, lrx);
        kernels::vlog(ry, lry);
        std::vector<double> floored(gamma);
        for (auto& v : floored) v = std::max(v, kFloor);
        kernels::vlog(floored, lg);
        for (std::size_t i = 0; i < n; ++i) {
            if (gamma[i] < kFloor) {
                out[i] = 0.0;
            } else {
                out[i] = kFourPi * xs[i] * xs[i] * kFourPi * ys[i] * ys[i] *
                         gamma[i] * (lg[i] - lrx[i] - lry[i]);
            }
        }
    };
    QuadOptions opt;
    opt.scale = quad_scale(pair.state, pair.space);
    return integrate_pair(f, spec, opt).value;
}

} // namespace

double mutual_information(const PairRadialDensity& pair,
                          const RadialDensity& one, MiMode mode,
                          const MeasureSpecs& specs) {
    require_unity(pair);
    require_unity(one);
    check_marginal(pair, one, specs.one);
    if (mode == MiMode::Direct)
        return mutual_information_direct(pair, one, specs.pair);
    return 2.0 * shannon_one(one, specs.one) - shannon_two(pair, specs.pair);
}

double reference_subtracted(double i_value, double i_reference) {
    return i_value - i_reference;
}

MeasureReport measure_state(const TwoElectronState& s,
                            const MeasureSpecs& specs) {
    MeasureReport r;
    r.z_nuclear = s.z_nuclear;
    r.kind = s.kind;
    const RadialDensity rho_u = to_unity(one_density(s, Space::Position));
    const RadialDensity pi_u = to_unity(one_density(s, Space::Momentum));
    const PairRadialDensity gamma_u = to_unity(pair_density(s, Space::Position));
    const PairRadialDensity pi2_u = to_unity(pair_density(s, Space::Momentum));
    r.s_rho_u = shannon_one(rho_u, specs.one);
    r.s_pi_u = shannon_one(pi_u, specs.one);
    r.s_gamma_u = shannon_two(gamma_u, specs.pair);
    r.s_pi2_u = shannon_two(pi2_u, specs.pair);
    r.entropy_sum_1e = r.s_rho_u + r.s_pi_u;
    r.entropy_sum_2e = r.s_gamma_u + r.s_pi2_u;
    r.i_r = 2.0 * r.s_rho_u - r.s_gamma_u;
    r.i_p = 2.0 * r.s_pi_u - r.s_pi2_u;
    r.s_cond_r = r.s_gamma_u - r.s_rho_u;
    r.s_cond_p = r.s_pi2_u - r.s_pi_u;
    return r;
}

std::string quantity_name(ProfileQuantity q) {
    switch (q) {
    case ProfileQuantity::EntropyDensityR:
        return "entropy-density-r";
    case ProfileQuantity::EntropyDensityP:
        return "entropy-density-p";
    case ProfileQuantity::InfoDensityP:
        return "info-density-p";
    case ProfileQuantity::RadialMomentum:
        return "radial-momentum";
    }
    return "unknown";
}

double ProfileCurve::trapezoid() const {
    double s = 0.0;
    for (std::size_t i = 1; i < abscissae.size(); ++i)
        s += 0.5 * (values[i] + values[i - 1]) *
             (abscissae[i] - abscissae[i - 1]);
    return s;
}

ProfileCurve entropy_density(const RadialDensity& d,
                             std::span<const double> abscissae) {
    ProfileCurve c;
    c.quantity = d.space == Space::Position ? ProfileQuantity::EntropyDensityR
                                            : ProfileQuantity::EntropyDensityP;
    c.z_nuclear = d.state.z_nuclear;
    c.kind_label = kind_name(d.state.kind);
    c.abscissae.assign(abscissae.begin(), abscissae.end());
    const std::size_t n = abscissae.size();
    c.values.resize(n);
    std::vector<double> dens(n), xl(n);
    d.eval(abscissae, dens);
    kernels::vxlogx(dens, xl);
    for (std::size_t i = 0; i < n; ++i)
        c.values[i] = -kFourPi * abscissae[i] * abscissae[i] * xl[i];
    return c;
}

ProfileCurve radial_momentum(const TwoElectronState& s,
                             std::span<const double> abscissae) {
    const RadialDensity pi_n = one_density(s, Space::Momentum);
    ProfileCurve c;
    c.quantity = ProfileQuantity::RadialMomentum;
    c.z_nuclear = s.z_nuclear;
    c.kind_label = kind_name(s.kind);
    c.abscissae.assign(abscissae.begin(), abscissae.end());
    c.values.resize(abscissae.size());
    std::vector<double> dens(abscissae.size());
    pi_n.eval(abscissae, dens);
    for (std::size_t i = 0; i < abscissae.size(); ++i)
        c.values[i] = kFourPi * abscissae[i] * abscissae[i] * dens[i];
    return c;
}

namespace {

// All three terms of the information density at one momentum value.
double info_density_at(const TwoElectronState& s,
                       const PairRadialDensity& pair_n, // N(N-1) = 2
                       const RadialDensity& one_n,      // N = 2
                       double p, const QuadSpec& inner_spec) {
    const double pi_p = one_n(p);
    const double ip = kFourPi * p * p * pi_p; // I(p)
    const double s_pi_p =
        pi_p < kFloor ? 0.0 : -kFourPi * p * p * pi_p * std::log(pi_p);

    BatchFn inner1 = [&pair_n, p](std::span<const double> p1,
                                  std::span<double> out) {
        const std::size_t n = p1.size();
        std::vector<double> xs(n, p), g(n), xl(n);
        pair_n.eval_points(xs, p1, g);
        kernels::vxlogx(g, xl);
        for (std::size_t i = 0; i < n; ++i) out[i] = p1[i] * p1[i] * xl[i];
    };
    BatchFn inner2 = [&pair_n, &one_n, p](std::span<const double> p1,
                                          std::span<double> out) {
        const std::size_t n = p1.size();
        std::vector<double> xs(n, p), g(n), rho(n), lrho(n);
        pair_n.eval_points(xs, p1, g);
        one_n.eval(p1, rho);
        for (auto& v : rho) v = std::max(v, kFloor);
        kernels::vlog(rho, lrho);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = g[i] < kFloor ? 0.0 : p1[i] * p1[i] * g[i] * lrho[i];
    };
    QuadOptions opt;
    opt.scale = quad_scale(s, Space::Momentum);
    const double j1 = integrate_radial(inner1, inner_spec, opt).value;
    const double j2 = integrate_radial(inner2, inner_spec, opt).value;

    const double ln2 = std::log(2.0);
    return 0.5 * ln2 * ip + 0.5 * s_pi_p +
           8.0 * M_PI * M_PI * p * p * (j1 - j2);
}

} // namespace

ProfileCurve info_density_p(const TwoElectronState& s,
                            std::span<const double> abscissae,
                            const QuadSpec& inner_spec) {
    const PairRadialDensity pair_n = pair_density(s, Space::Momentum);
    const RadialDensity one_n = one_density(s, Space::Momentum);
    ProfileCurve c;
    c.quantity = ProfileQuantity::InfoDensityP;
    c.z_nuclear = s.z_nuclear;
    c.kind_label = kind_name(s.kind);
    c.abscissae.assign(abscissae.begin(), abscissae.end());
    c.values.resize(abscissae.size());
    for (std::size_t i = 0; i < abscissae.size(); ++i)
        c.values[i] =
            info_density_at(s, pair_n, one_n, abscissae[i], inner_spec);
    return c;
}

double info_density_integral(const TwoElectronState& s,
                             const QuadSpec& outer_spec,
                             const QuadSpec& inner_spec) {
    const PairRadialDensity pair_n = pair_density(s, Space::Momentum);
    const RadialDensity one_n = one_density(s, Space::Momentum);
    BatchFn f = [&](std::span<const double> ps, std::span<double> out) {
        for (std::size_t i = 0; i < ps.size(); ++i)
            out[i] = info_density_at(s, pair_n, one_n, ps[i], inner_spec);
    };
    QuadOptions opt;
    opt.scale = quad_scale(s, Space::Momentum);
    opt.initial_panels = 8;
    return integrate_radial(f, outer_spec, opt).value;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("bad log grid parameters");
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> default_position_grid() {
    return log_spaced(1e-3, 20.0, 2400);
}

std::vector<double> default_momentum_grid() {
    return log_spaced(1e-3, 40.0, 2400);
}

} // namespace helionics
