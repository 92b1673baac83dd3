#include "helionics/series.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace helionics {

std::string series_kind_name(SeriesKind k) {
    switch (k) {
    case SeriesKind::Hydrogenic:
        return "hydrogenic";
    case SeriesKind::Singlet:
        return "singlet";
    case SeriesKind::Triplet:
        return "triplet";
    case SeriesKind::NonInteractingTriplet:
        return "ni-triplet";
    }
    return "unknown";
}

SeriesKind parse_series_kind(const std::string& name) {
    if (name == "hydrogenic") return SeriesKind::Hydrogenic;
    if (name == "singlet") return SeriesKind::Singlet;
    if (name == "triplet") return SeriesKind::Triplet;
    if (name == "ni-triplet") return SeriesKind::NonInteractingTriplet;
    throw std::invalid_argument("unknown kind: " + name);
}

namespace {

// Unity-normalized hydrogenic 1s momentum entropy at Z=1, by quadrature of
// pi(p) = 8 / (pi^2 (1+p^2)^4).
double hydrogenic_s_pi_1() {
    static const double value = [] {
        BatchFn f = [](std::span<const double> ps, std::span<double> out) {
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const double p = ps[i];
                const double d = 1.0 + p * p;
                const double pi_p = 8.0 / (M_PI * M_PI * d * d * d * d);
                out[i] = -4.0 * M_PI * p * p * pi_p * std::log(pi_p);
            }
        };
        return integrate_radial(f, {1e-12, 1e-14, 4096}).value;
    }();
    return value;
}

} // namespace

HydrogenicEntropies hydrogenic_entropies(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("Z must be > 0");
    HydrogenicEntropies h;
    h.s_rho = 3.0 + std::log(M_PI) - 3.0 * std::log(z);
    h.s_pi = hydrogenic_s_pi_1() + 3.0 * std::log(z);
    return h;
}

namespace {

SweepRow compute_row(StateKind kind, double z, const SweepOptions& opt) {
    SweepRow row;
    row.z = z;
    row.kind = kind;
    try {
        const OptimizationResult o =
            optimize(kind, z, std::nullopt, opt.repulsion);
        row.params = o.params;
        row.energy = o.energy;
        const TwoElectronState s = build_state(kind, z, o.params);
        row.report = measure_state(s, opt.specs);
        if (kind == StateKind::Triplet) {
            const TwoElectronState ni =
                build_state(StateKind::NonInteractingTriplet, z);
            const MeasureReport ni_report = measure_state(ni, opt.specs);
            row.report.i_r_prime =
                reference_subtracted(row.report.i_r, ni_report.i_r);
            row.report.i_p_prime =
                reference_subtracted(row.report.i_p, ni_report.i_p);
        }
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

std::vector<SweepRow> sweep(StateKind kind, std::span<const double> z_values,
                            const SweepOptions& opt) {
    if (z_values.empty())
        throw std::invalid_argument("sweep requires at least one Z value");
    std::vector<SweepRow> rows(z_values.size());
    if (opt.parallel && z_values.size() > 1) {
        const unsigned workers = std::max(
            1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                   z_values.size()));
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= z_values.size()) break;
                    rows[i] = compute_row(kind, z_values[i], opt);
                }
            });
        }
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < z_values.size(); ++i)
            rows[i] = compute_row(kind, z_values[i], opt);
    }
    return rows;
}

std::string quantity_label(CrossQuantity q) {
    switch (q) {
    case CrossQuantity::OneElectronEntropy:
        return "one-electron-entropy";
    case CrossQuantity::TwoElectronEntropy:
        return "two-electron-entropy";
    case CrossQuantity::MutualInformation:
        return "mutual-information";
    }
    return "unknown";
}

CrossQuantity parse_quantity(const std::string& name) {
    if (name == "one-electron-entropy") return CrossQuantity::OneElectronEntropy;
    if (name == "two-electron-entropy") return CrossQuantity::TwoElectronEntropy;
    if (name == "mutual-information") return CrossQuantity::MutualInformation;
    throw std::invalid_argument("unknown quantity: " + name);
}

namespace {

// Position-minus-momentum difference for one state.
double state_difference(const TwoElectronState& s, CrossQuantity q,
                        const MeasureSpecs& specs) {
    switch (q) {
    case CrossQuantity::OneElectronEntropy: {
        const double sr =
            shannon_one(to_unity(one_density(s, Space::Position)), specs.one);
        const double sp =
            shannon_one(to_unity(one_density(s, Space::Momentum)), specs.one);
        return sr - sp;
    }
    case CrossQuantity::TwoElectronEntropy: {
        const double sg = shannon_two(
            to_unity(pair_density(s, Space::Position)), specs.pair);
        const double sp = shannon_two(
            to_unity(pair_density(s, Space::Momentum)), specs.pair);
        return sg - sp;
    }
    case CrossQuantity::MutualInformation: {
        const MeasureReport r = measure_state(s, specs);
        return r.i_r - r.i_p;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

CrossoverResult find_crossover(SeriesKind kind, CrossQuantity quantity,
                               double z_lo, double z_hi,
                               const CrossoverOptions& opt) {
    if (kind == SeriesKind::Hydrogenic &&
        quantity != CrossQuantity::OneElectronEntropy)
        throw std::invalid_argument(
            "hydrogenic series only has one-electron entropies");

    // warm-start cache for the optimized kinds; bisection is sequential
    std::map<double, StateParams> warm;

    auto g = [&](double z) -> double {
        switch (kind) {
        case SeriesKind::Hydrogenic: {
            const HydrogenicEntropies h = hydrogenic_entropies(z);
            return h.s_rho - h.s_pi;
        }
        case SeriesKind::NonInteractingTriplet: {
            const TwoElectronState s =
                build_state(StateKind::NonInteractingTriplet, z);
            return state_difference(s, quantity, opt.specs);
        }
        case SeriesKind::Singlet:
        case SeriesKind::Triplet: {
            const StateKind sk = kind == SeriesKind::Singlet
                                     ? StateKind::Singlet
                                     : StateKind::Triplet;
            std::optional<StateParams> start;
            if (!warm.empty()) {
                auto it = warm.lower_bound(z);
                if (it == warm.end()) {
                    start = std::prev(it)->second;
                } else if (it == warm.begin()) {
                    start = it->second;
                } else {
                    auto prev = std::prev(it);
                    start = (z - prev->first <= it->first - z) ? prev->second
                                                               : it->second;
                }
            }
            const OptimizationResult o = optimize(sk, z, start, opt.repulsion);
            warm[z] = o.params;
            const TwoElectronState s = build_state(sk, z, o.params);
            return state_difference(s, quantity, opt.specs);
        }
        }
        throw std::logic_error("unreachable");
    };

    CrossoverResult res;
    res.quantity = quantity;
    res.kind = kind;
    res.z_lo = z_lo;
    res.z_hi = z_hi;
    res.z_star = find_root(g, z_lo, z_hi, opt.z_tol);
    return res;
}

namespace {

double row_difference(const SweepRow& r, CrossQuantity q) {
    switch (q) {
    case CrossQuantity::OneElectronEntropy:
        return r.report.s_rho_u - r.report.s_pi_u;
    case CrossQuantity::TwoElectronEntropy:
        return r.report.s_gamma_u - r.report.s_pi2_u;
    case CrossQuantity::MutualInformation:
        return r.report.i_r - r.report.i_p;
    }
    throw std::logic_error("unreachable");
}

} // namespace

double crossover_from_rows(std::span<const SweepRow> rows,
                           CrossQuantity quantity) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!rows[i - 1].error.empty() || !rows[i].error.empty()) continue;
        const double ga = row_difference(rows[i - 1], quantity);
        const double gb = row_difference(rows[i], quantity);
        if ((ga < 0.0) != (gb < 0.0))
            return rows[i - 1].z +
                   ga / (ga - gb) * (rows[i].z - rows[i - 1].z);
    }
    throw NoSignChangeError("tabulated difference never changes sign");
}

} // namespace helionics
