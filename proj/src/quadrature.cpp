#include "helionics/quadrature.hpp"

#include "helionics/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace helionics {

namespace {

struct GlRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes of the n-point rule on [-1,1] by Newton iteration on P_n.
GlRule compute_gauss_legendre(int n) {
    GlRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 3e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

const GlRule& gl_rule(int order) {
    if (order < 2) throw std::invalid_argument("quadrature order must be >= 2");
    static std::map<int, GlRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

double map_point(Mapping m, double scale, double t) {
    return m == Mapping::Algebraic ? scale * t / (1.0 - t)
                                   : -scale * std::log1p(-t);
}

double map_jacobian(Mapping m, double scale, double t) {
    const double u = 1.0 - t;
    return m == Mapping::Algebraic ? scale / (u * u) : scale / u;
}

// Grid over t in [0,1] with `panels` equal panels of `order` GL points each,
// pushed through the mapping. Weights carry the full Jacobian.
void build_grid(Mapping mapping, double scale, int panels, int order,
                std::vector<double>& nodes, std::vector<double>& weights) {
    const GlRule& rule = gl_rule(order);
    nodes.resize(static_cast<std::size_t>(panels) * order);
    weights.resize(nodes.size());
    const double h = 1.0 / panels;
    std::size_t k = 0;
    for (int p = 0; p < panels; ++p) {
        const double t0 = p * h;
        for (int j = 0; j < order; ++j, ++k) {
            const double t = t0 + 0.5 * h * (rule.nodes[j] + 1.0);
            nodes[k] = map_point(mapping, scale, t);
            weights[k] =
                0.5 * h * rule.weights[j] * map_jacobian(mapping, scale, t);
        }
    }
}

double tolerance_target(const QuadSpec& spec, double value) {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
}

} // namespace

void QuadSpec::validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be > 0");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
    if (max_panels < 1) throw std::invalid_argument("max_panels must be >= 1");
}

void RadialGrid::validate() const {
    if (nodes.size() != weights.size())
        throw Error("grid nodes/weights length mismatch");
    if (nodes.empty()) throw Error("grid is empty");
    double prev = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(nodes[i] > prev)) throw Error("grid nodes not strictly increasing and positive");
        if (!(weights[i] > 0.0)) throw Error("grid weights not positive");
        prev = nodes[i];
    }
    std::vector<double> negx(nodes.size()), ex(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) negx[i] = -nodes[i];
    kernels::vexp(negx, ex);
    const double one = kernels::dot(weights, ex);
    if (std::abs(one - 1.0) > declared_tol) {
        std::ostringstream os;
        os << "grid fails the e^-x normalization check: got " << one;
        throw Error(os.str());
    }
}

RadialGrid make_radial_grid(Mapping mapping, double scale, int panels,
                            int order) {
    if (!(scale > 0.0)) throw std::invalid_argument("grid scale must be > 0");
    if (panels < 1) throw std::invalid_argument("panels must be >= 1");
    RadialGrid g;
    build_grid(mapping, scale, panels, order, g.nodes, g.weights);
    g.mapping_id = mapping == Mapping::Algebraic ? "algebraic" : "exponential";
    g.panel_count = panels;
    // each grid declares the reference accuracy it actually achieves; the
    // exponential mapping degrades when scale drops below the decay length
    std::vector<double> negx(g.nodes.size()), ex(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) negx[i] = -g.nodes[i];
    kernels::vexp(negx, ex);
    const double defect = std::abs(kernels::dot(g.weights, ex) - 1.0);
    g.declared_tol = std::max(4.0 * defect, 1e-12);
    return g;
}

BatchFn batch_from_scalar(std::function<double(double)> f) {
    return [f = std::move(f)](std::span<const double> x,
                              std::span<double> out) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = f(x[i]);
    };
}

namespace {

// One refinement level of the 1D rule: per-panel dots, panel sums combined
// by fixed-order pairwise summation.
double eval_level_1d(const BatchFn& f, Mapping mapping, double scale,
                     int panels, int order) {
    std::vector<double> nodes, weights;
    build_grid(mapping, scale, panels, order, nodes, weights);
    std::vector<double> fx(nodes.size());
    f(nodes, fx);
    std::vector<double> panel_sums(panels);
    for (int p = 0; p < panels; ++p) {
        const std::size_t off = static_cast<std::size_t>(p) * order;
        panel_sums[p] =
            kernels::dot(std::span(weights).subspan(off, order),
                         std::span(fx).subspan(off, order));
    }
    return kernels::pairwise_sum(panel_sums);
}

} // namespace

QuadResult integrate_radial(const BatchFn& f, const QuadSpec& spec,
                            const QuadOptions& opt) {
    spec.validate();
    int panels = std::min(opt.initial_panels, spec.max_panels);
    double prev = eval_level_1d(f, opt.mapping, opt.scale, panels, opt.order);
    while (2 * panels <= spec.max_panels) {
        panels *= 2;
        const double value =
            eval_level_1d(f, opt.mapping, opt.scale, panels, opt.order);
        const double err = std::abs(value - prev);
        if (err <= tolerance_target(spec, value))
            return {value, err, panels};
        prev = value;
    }
    std::ostringstream os;
    os << "radial quadrature did not converge within " << spec.max_panels
       << " panels";
    throw NonConvergenceError(os.str());
}

PairIntegrand pair_from_scalar(std::function<double(double, double)> f) {
    PairIntegrand pi;
    pi.eval_grid = [f](std::span<const double> rows,
                       std::span<const double> cols, std::span<double> out) {
        std::size_t k = 0;
        for (double x : rows)
            for (double y : cols) out[k++] = f(x, y);
    };
    pi.eval_points = [f](std::span<const double> xs,
                         std::span<const double> ys, std::span<double> out) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i], ys[i]);
    };
    return pi;
}

namespace {

// One refinement level of the pair rule. The tensor sum is computed in row
// blocks; every diagonal panel block is then replaced by two Duffy-mapped
// triangle rules so kinks and zero lines along x = y do not degrade the
// composite order.
double eval_level_2d(const PairIntegrand& f, Mapping mapping, double scale,
                     int panels, int order) {
    std::vector<double> nodes, weights;
    build_grid(mapping, scale, panels, order, nodes, weights);
    const std::size_t n = nodes.size();

    std::vector<double> row_sums(n);
    std::vector<double> rect_diag(panels, 0.0);
    std::vector<double> tile(static_cast<std::size_t>(order) * n);
    std::vector<double> row_partials(order);
    for (int bp = 0; bp < panels; ++bp) {
        const std::size_t off = static_cast<std::size_t>(bp) * order;
        const auto rows = std::span(nodes).subspan(off, order);
        f.eval_grid(rows, nodes, tile);
        for (int r = 0; r < order; ++r) {
            const auto row = std::span(tile).subspan(
                static_cast<std::size_t>(r) * n, n);
            row_sums[off + r] = kernels::dot(weights, row);
            row_partials[r] =
                kernels::dot(std::span(weights).subspan(off, order),
                             row.subspan(off, order));
        }
        rect_diag[bp] = kernels::dot(
            std::span(weights).subspan(off, order), row_partials);
    }
    const double tensor_total = kernels::dot(weights, row_sums);

    // Duffy triangles on each diagonal panel block, set up in t space where
    // the panels live. Lower: t2 = t0 + s*(t1 - t0); upper mirrors it.
    const GlRule& rule = gl_rule(order);
    const double h = 1.0 / panels;
    const std::size_t per_tri = static_cast<std::size_t>(order) * order;
    std::vector<double> xs(2 * per_tri * panels), ys(2 * per_tri * panels),
        wts(2 * per_tri * panels), fv(2 * per_tri * panels);
    std::size_t k = 0;
    for (int bp = 0; bp < panels; ++bp) {
        const double t0 = bp * h;
        for (int a = 0; a < order; ++a) {
            const double ta = t0 + 0.5 * h * (rule.nodes[a] + 1.0);
            const double wa = 0.5 * h * rule.weights[a];
            const double ja = map_jacobian(mapping, scale, ta);
            const double span_a = ta - t0;
            for (int b = 0; b < order; ++b) {
                const double s = 0.5 * (rule.nodes[b] + 1.0);
                const double wb = 0.5 * rule.weights[b];
                const double tb = t0 + s * span_a;
                const double jb = map_jacobian(mapping, scale, tb);
                const double w = wa * wb * span_a * ja * jb;
                // lower triangle: (x, y) with y <= x in t space
                xs[k] = map_point(mapping, scale, ta);
                ys[k] = map_point(mapping, scale, tb);
                wts[k] = w;
                ++k;
                // upper triangle mirrors the roles
                xs[k] = map_point(mapping, scale, tb);
                ys[k] = map_point(mapping, scale, ta);
                wts[k] = w;
                ++k;
            }
        }
    }
    f.eval_points(xs, ys, fv);
    std::vector<double> corrections(panels);
    for (int bp = 0; bp < panels; ++bp) {
        const std::size_t off = static_cast<std::size_t>(bp) * 2 * per_tri;
        const double tri =
            kernels::dot(std::span(wts).subspan(off, 2 * per_tri),
                         std::span(fv).subspan(off, 2 * per_tri));
        corrections[bp] = tri - rect_diag[bp];
    }
    return tensor_total + kernels::pairwise_sum(corrections);
}

} // namespace

QuadResult integrate_pair(const PairIntegrand& f, const QuadSpec& spec,
                          const QuadOptions& opt) {
    spec.validate();
    int panels = std::min(opt.initial_panels, spec.max_panels);
    double prev = eval_level_2d(f, opt.mapping, opt.scale, panels, opt.order);
    while (2 * panels <= spec.max_panels) {
        panels *= 2;
        const double value =
            eval_level_2d(f, opt.mapping, opt.scale, panels, opt.order);
        const double err = std::abs(value - prev);
        if (err <= tolerance_target(spec, value))
            return {value, err, panels};
        prev = value;
    }
    std::ostringstream os;
    os << "pair quadrature did not converge within " << spec.max_panels
       << " panels per axis";
    throw NonConvergenceError(os.str());
}

double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol) {
    if (!(lo < hi)) throw std::invalid_argument("invalid bracket");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    double flo = g(lo);
    double fhi = g(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw NoSignChangeError("no sign change over the bracket");
    for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::span<const double> gauss_legendre_nodes(int order) {
    return gl_rule(order).nodes;
}

std::span<const double> gauss_legendre_weights(int order) {
    return gl_rule(order).weights;
}

} // namespace helionics
