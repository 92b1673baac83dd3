// helionics: optimize | sweep | crossover | profile | plot

#include "helionics/hamiltonian.hpp"
#include "helionics/kernels.hpp"
#include "helionics/measures.hpp"
#include "helionics/runcache.hpp"
#include "helionics/series.hpp"
#include "helionics/svgplot.hpp"
#include "helionics/table.hpp"
#include "helionics/version.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace helionics;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoBoundState = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitPartialFailure = 4;

struct CommonOpts {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::string out;
    std::string cache_dir;
    std::string simd = "auto";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--quad-rel-tol", c.rel_tol, "relative quadrature tolerance");
    cmd->add_option("--quad-abs-tol", c.abs_tol, "absolute quadrature tolerance");
    cmd->add_option("--out", c.out, "output file");
    cmd->add_option("--cache-dir", c.cache_dir,
                    "cache directory (default: HELIONICS_CACHE or .helionics-cache)");
    cmd->add_option("--simd", c.simd, "kernel backend: auto|scalar|avx2");
}

void apply_simd(const std::string& name) {
    if (name == "auto") return;
    if (name == "scalar") kernels::set_backend(kernels::Backend::Scalar);
    else if (name == "avx2") kernels::set_backend(kernels::Backend::Avx2);
    else throw CLI::ValidationError("--simd must be auto|scalar|avx2");
}

MeasureSpecs make_measure_specs(const CommonOpts& c) {
    MeasureSpecs m;
    m.one = {std::min(c.rel_tol * 0.1, 1e-10), std::min(c.abs_tol * 0.1, 1e-13), 4096};
    m.pair = {c.rel_tol, c.abs_tol, 512};
    return m;
}

std::string iso_now() {
    const auto t = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
}

OrderedJson energy_json(const EnergyBreakdown& e) {
    OrderedJson j;
    j["kinetic"] = e.kinetic;
    j["nuclear"] = e.nuclear_attraction;
    j["repulsion"] = e.electron_repulsion;
    j["total"] = e.total;
    return j;
}

StateKind to_state_kind(SeriesKind sk) {
    switch (sk) {
    case SeriesKind::Singlet:
        return StateKind::Singlet;
    case SeriesKind::Triplet:
        return StateKind::Triplet;
    case SeriesKind::NonInteractingTriplet:
        return StateKind::NonInteractingTriplet;
    default:
        throw std::invalid_argument("expected a two-electron kind");
    }
}

// ---------------------------------------------------------------- optimize

int cmd_optimize(const std::string& kind_name_in, double z,
                 const CommonOpts& c) {
    apply_simd(c.simd);
    const StateKind kind = to_state_kind(parse_series_kind(kind_name_in));
    const OptimizationResult r = optimize(kind, z);
    OrderedJson j;
    j["kind"] = kind_name(kind);
    j["z"] = z;
    j["params"] = {r.params.z1, r.params.z2};
    j["energy"] = energy_json(r.energy);
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    const std::string doc = j.dump(2) + "\n";
    std::cout << doc;
    if (!c.out.empty()) write_file(c.out, doc);
    return kExitOk;
}

// ------------------------------------------------------------------- sweep

OrderedJson row_to_json(const SweepRow& r) {
    OrderedJson j;
    j["z"] = r.z;
    j["kind"] = kind_name(r.kind);
    if (!r.error.empty()) {
        j["error"] = r.error;
        return j;
    }
    j["params"] = {r.params.z1, r.params.z2};
    j["energy"] = energy_json(r.energy);
    OrderedJson m;
    m["s_rho_u"] = r.report.s_rho_u;
    m["s_pi_u"] = r.report.s_pi_u;
    m["s_gamma_u"] = r.report.s_gamma_u;
    m["s_pi2_u"] = r.report.s_pi2_u;
    m["sum1e"] = r.report.entropy_sum_1e;
    m["sum2e"] = r.report.entropy_sum_2e;
    m["i_r"] = r.report.i_r;
    m["i_p"] = r.report.i_p;
    if (r.report.i_r_prime) m["i_r_prime"] = *r.report.i_r_prime;
    if (r.report.i_p_prime) m["i_p_prime"] = *r.report.i_p_prime;
    m["s_cond_r"] = r.report.s_cond_r;
    m["s_cond_p"] = r.report.s_cond_p;
    j["report"] = m;
    return j;
}

SweepRow row_from_json(const OrderedJson& j) {
    SweepRow r;
    r.z = j.at("z").get<double>();
    const std::string k = j.at("kind").get<std::string>();
    r.kind = k == "singlet" ? StateKind::Singlet
             : k == "triplet" ? StateKind::Triplet
                              : StateKind::NonInteractingTriplet;
    if (j.contains("error")) {
        r.error = j.at("error").get<std::string>();
        return r;
    }
    r.params.z1 = j.at("params")[0].get<double>();
    r.params.z2 = j.at("params")[1].get<double>();
    const auto& e = j.at("energy");
    r.energy.kinetic = e.at("kinetic").get<double>();
    r.energy.nuclear_attraction = e.at("nuclear").get<double>();
    r.energy.electron_repulsion = e.at("repulsion").get<double>();
    r.energy.total = e.at("total").get<double>();
    const auto& m = j.at("report");
    r.report.z_nuclear = r.z;
    r.report.kind = r.kind;
    r.report.s_rho_u = m.at("s_rho_u").get<double>();
    r.report.s_pi_u = m.at("s_pi_u").get<double>();
    r.report.s_gamma_u = m.at("s_gamma_u").get<double>();
    r.report.s_pi2_u = m.at("s_pi2_u").get<double>();
    r.report.entropy_sum_1e = m.at("sum1e").get<double>();
    r.report.entropy_sum_2e = m.at("sum2e").get<double>();
    r.report.i_r = m.at("i_r").get<double>();
    r.report.i_p = m.at("i_p").get<double>();
    if (m.contains("i_r_prime")) r.report.i_r_prime = m.at("i_r_prime").get<double>();
    if (m.contains("i_p_prime")) r.report.i_p_prime = m.at("i_p_prime").get<double>();
    r.report.s_cond_r = m.at("s_cond_r").get<double>();
    r.report.s_cond_p = m.at("s_cond_p").get<double>();
    return r;
}

SweepRow compute_sweep_row(StateKind kind, double z, const MeasureSpecs& specs) {
    SweepRow row;
    row.z = z;
    row.kind = kind;
    try {
        if (kind == StateKind::Singlet && z < 2.0)
            throw NoBoundStateError("singlet sweep requires Z >= 2");
        const OptimizationResult o = optimize(kind, z);
        row.params = o.params;
        row.energy = o.energy;
        const TwoElectronState s = build_state(kind, z, o.params);
        row.report = measure_state(s, specs);
        if (kind == StateKind::Triplet) {
            const TwoElectronState ni =
                build_state(StateKind::NonInteractingTriplet, z);
            const MeasureReport nir = measure_state(ni, specs);
            row.report.i_r_prime = row.report.i_r - nir.i_r;
            row.report.i_p_prime = row.report.i_p - nir.i_p;
        }
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_error_col) {
    Table t;
    t.columns = {"z", "kind", "z1", "z2", "energy", "s_rho_u", "s_pi_u",
                 "s_gamma_u", "s_pi2_u", "sum1e", "sum2e", "i_r", "i_p",
                 "i_r_prime", "i_p_prime"};
    if (with_error_col) t.columns.push_back("error");
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        cells.push_back(format_sig(r.z));
        cells.push_back(kind_name(r.kind));
        if (r.error.empty()) {
            cells.push_back(format_sig(r.params.z1));
            cells.push_back(format_sig(r.params.z2));
            cells.push_back(format_sig(r.energy.total));
            cells.push_back(format_sig(r.report.s_rho_u));
            cells.push_back(format_sig(r.report.s_pi_u));
            cells.push_back(format_sig(r.report.s_gamma_u));
            cells.push_back(format_sig(r.report.s_pi2_u));
            cells.push_back(format_sig(r.report.entropy_sum_1e));
            cells.push_back(format_sig(r.report.entropy_sum_2e));
            cells.push_back(format_sig(r.report.i_r));
            cells.push_back(format_sig(r.report.i_p));
            cells.push_back(r.report.i_r_prime ? format_sig(*r.report.i_r_prime) : "");
            cells.push_back(r.report.i_p_prime ? format_sig(*r.report.i_p_prime) : "");
            if (with_error_col) cells.push_back("");
        } else {
            for (int i = 0; i < 13; ++i) cells.push_back("");
            if (with_error_col) cells.push_back(r.error);
        }
        t.rows.push_back(std::move(cells));
    }
    return t.to_csv();
}

// Closed-form hydrogenic rows fill the one-electron columns of the same
// schema; the two-electron columns stay empty.
void write_hydrogenic_sweep(const std::vector<double>& zs,
                            const std::string& out) {
    Table t;
    t.columns = {"z", "kind", "z1", "z2", "energy", "s_rho_u", "s_pi_u",
                 "s_gamma_u", "s_pi2_u", "sum1e", "sum2e", "i_r", "i_p",
                 "i_r_prime", "i_p_prime"};
    for (double z : zs) {
        const HydrogenicEntropies h = hydrogenic_entropies(z);
        t.rows.push_back({format_sig(z), "hydrogenic", format_sig(z),
                          format_sig(z), format_sig(-0.5 * z * z),
                          format_sig(h.s_rho), format_sig(h.s_pi), "", "",
                          format_sig(h.s_rho + h.s_pi), "", "", "", "", ""});
    }
    write_file(out, t.to_csv());
}

int cmd_sweep(const std::string& kind_name_in, double z_min, double z_max,
              double step, bool no_cache, const CommonOpts& c) {
    apply_simd(c.simd);
    if (c.out.empty()) throw CLI::ValidationError("sweep requires --out");
    const SeriesKind sk = parse_series_kind(kind_name_in);
    if (!(step > 0.0) || !(z_max >= z_min))
        throw CLI::ValidationError("invalid sweep range");

    std::vector<double> zs;
    for (double z = z_min; z <= z_max + 1e-9 * step; z += step) zs.push_back(z);

    if (sk == SeriesKind::Hydrogenic) {
        write_hydrogenic_sweep(zs, c.out);
        return kExitOk;
    }
    const StateKind kind = to_state_kind(sk);

    const MeasureSpecs specs = make_measure_specs(c);
    const RowCache cache(resolve_cache_dir(c.cache_dir));

    auto row_key = [&](double z) {
        std::ostringstream os;
        os << kind_name(kind) << "|z=" << format_sig(z, 17)
           << "|one=" << specs.one.rel_tol << ',' << specs.one.abs_tol << ','
           << specs.one.max_panels << "|pair=" << specs.pair.rel_tol << ','
           << specs.pair.abs_tol << ',' << specs.pair.max_panels
           << "|v=" << kVersion;
        return kind_name(kind) + "_z" + format_sig(z, 12) + "_" +
               hash_hex(fnv1a(os.str()));
    };

    const std::string started = iso_now();
    std::vector<SweepRow> rows(zs.size());
    std::atomic<int> hits{0}, misses{0};
    std::atomic<std::size_t> next{0};
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        zs.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= zs.size()) break;
                const std::string key = row_key(zs[i]);
                if (!no_cache) {
                    if (auto doc = cache.load(key)) {
                        rows[i] = row_from_json(*doc);
                        ++hits;
                        continue;
                    }
                }
                rows[i] = compute_sweep_row(kind, zs[i], specs);
                ++misses;
                if (!no_cache) cache.store(key, row_to_json(rows[i]));
            }
        });
    }
    for (auto& t : pool) t.join();

    const bool any_error =
        std::any_of(rows.begin(), rows.end(),
                    [](const SweepRow& r) { return !r.error.empty(); });
    write_file(c.out, sweep_csv(rows, any_error));

    OrderedJson manifest;
    {
        std::ostringstream cmd;
        cmd << "sweep --kind " << kind_name_in << " --z-min " << z_min
            << " --z-max " << z_max << " --step " << step;
        manifest["command"] = cmd.str();
        OrderedJson cfg;
        cfg["quad_rel_tol"] = c.rel_tol;
        cfg["quad_abs_tol"] = c.abs_tol;
        cfg["cache_dir"] = cache.dir().string();
        manifest["config"] = cfg;
        OrderedJson q;
        q["one"] = {{"rel_tol", specs.one.rel_tol},
                    {"abs_tol", specs.one.abs_tol},
                    {"max_panels", specs.one.max_panels}};
        q["pair"] = {{"rel_tol", specs.pair.rel_tol},
                     {"abs_tol", specs.pair.abs_tol},
                     {"max_panels", specs.pair.max_panels}};
        manifest["quadrature"] = q;
        manifest["version"] = kVersion;
        std::ostringstream key_material;
        for (double z : zs) key_material << row_key(z) << ';';
        manifest["input_hash"] = hash_hex(fnv1a(key_material.str()));
        manifest["started_at"] = started;
        manifest["finished_at"] = iso_now();
        manifest["outputs"] = {c.out};
        manifest["cache"] = {{"dir", cache.dir().string()},
                             {"hits", hits.load()},
                             {"misses", misses.load()}};
    }
    write_file(c.out + ".manifest.json", manifest.dump(2) + "\n");

    return any_error ? kExitPartialFailure : kExitOk;
}

// --------------------------------------------------------------- crossover

int cmd_crossover(const std::string& kind_name_in,
                  const std::string& quantity_name_in, double z_lo,
                  double z_hi, double z_tol, const CommonOpts& c) {
    apply_simd(c.simd);
    const SeriesKind kind = parse_series_kind(kind_name_in);
    const CrossQuantity q = parse_quantity(quantity_name_in);
    CrossoverOptions opt;
    opt.z_tol = z_tol;
    opt.specs = make_measure_specs(c);
    const CrossoverResult r = find_crossover(kind, q, z_lo, z_hi, opt);
    OrderedJson j;
    j["quantity"] = quantity_label(r.quantity);
    j["kind"] = series_kind_name(r.kind);
    j["z_star"] = r.z_star;
    j["bracket"] = {r.z_lo, r.z_hi};
    const std::string doc = j.dump(2) + "\n";
    std::cout << doc;
    if (!c.out.empty()) write_file(c.out, doc);
    return kExitOk;
}

// ----------------------------------------------------------------- profile

int cmd_profile(const std::string& kind_name_in, double z,
                const std::string& quantity_name_in, double grid_min,
                double grid_max, int grid_points, const CommonOpts& c) {
    apply_simd(c.simd);
    if (c.out.empty()) throw CLI::ValidationError("profile requires --out");
    const SeriesKind kind = parse_series_kind(kind_name_in);

    ProfileQuantity q;
    if (quantity_name_in == "entropy-density-r") q = ProfileQuantity::EntropyDensityR;
    else if (quantity_name_in == "entropy-density-p") q = ProfileQuantity::EntropyDensityP;
    else if (quantity_name_in == "info-density-p") q = ProfileQuantity::InfoDensityP;
    else if (quantity_name_in == "radial-momentum") q = ProfileQuantity::RadialMomentum;
    else throw CLI::ValidationError("unknown quantity: " + quantity_name_in);

    const bool momentum = q != ProfileQuantity::EntropyDensityR;
    std::vector<double> grid;
    if (grid_points > 0) {
        grid = log_spaced(grid_min, grid_max, grid_points);
    } else {
        grid = momentum ? default_momentum_grid() : default_position_grid();
    }

    // the hydrogenic series is the one-electron 1s(Z) atom; its unity
    // density coincides with the product-state singlet at zeta = Z
    TwoElectronState state;
    if (kind == SeriesKind::Hydrogenic) {
        if (q == ProfileQuantity::InfoDensityP)
            throw CLI::ValidationError("info-density-p needs a two-electron state");
        state = build_state(StateKind::Singlet, z, StateParams{z, z});
    } else {
        const StateKind sk = to_state_kind(kind);
        const OptimizationResult o = optimize(sk, z);
        state = build_state(sk, z, o.params);
    }

    ProfileCurve curve;
    switch (q) {
    case ProfileQuantity::EntropyDensityR:
        curve = entropy_density(to_unity(one_density(state, Space::Position)), grid);
        break;
    case ProfileQuantity::EntropyDensityP:
        curve = entropy_density(to_unity(one_density(state, Space::Momentum)), grid);
        break;
    case ProfileQuantity::InfoDensityP:
        curve = info_density_p(state, grid);
        break;
    case ProfileQuantity::RadialMomentum:
        curve = radial_momentum(state, grid);
        // one electron, not two: halve the N-normalized distribution
        if (kind == SeriesKind::Hydrogenic)
            for (double& v : curve.values) v *= 0.5;
        break;
    }

    Table t;
    t.columns = {"abscissa", "value"};
    for (std::size_t i = 0; i < curve.abscissae.size(); ++i)
        t.rows.push_back({format_sig(curve.abscissae[i]),
                          format_sig(curve.values[i])});
    write_file(c.out, t.to_csv());
    return kExitOk;
}

// -------------------------------------------------------------------- plot

Table load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open CSV: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return Table::from_csv(ss.str());
}

PlotSeries series_from_table(const Table& t, const std::string& name,
                             const std::string& xcol, const std::string& ycol,
                             double y_scale) {
    const int xi = t.column_index(xcol);
    const int yi = t.column_index(ycol);
    if (xi < 0) throw MissingColumnError("missing column: " + xcol);
    if (yi < 0) throw MissingColumnError("missing column: " + ycol);
    PlotSeries s;
    s.name = name;
    for (const auto& row : t.rows) {
        if (static_cast<std::size_t>(std::max(xi, yi)) >= row.size()) continue;
        const std::string& xs = row[xi];
        const std::string& ys = row[yi];
        if (xs.empty() || ys.empty()) continue;
        s.x.push_back(std::strtod(xs.c_str(), nullptr));
        s.y.push_back(y_scale * std::strtod(ys.c_str(), nullptr));
    }
    return s;
}

int cmd_plot(const std::string& input, const std::string& spec_path,
             const CommonOpts& c) {
    if (c.out.empty()) throw CLI::ValidationError("plot requires --out");
    std::ifstream spec_in(spec_path);
    if (!spec_in) throw Error("cannot open plot spec: " + spec_path);
    const OrderedJson spec = OrderedJson::parse(spec_in);

    const Table main_table = load_table(input);

    auto build_series = [&](const OrderedJson& arr) {
        std::vector<PlotSeries> out;
        for (const auto& s : arr) {
            const std::string csv = s.value("csv", std::string());
            const double y_scale = s.value("y_scale", 1.0);
            if (csv.empty()) {
                out.push_back(series_from_table(
                    main_table, s.value("name", std::string("series")),
                    s.at("x").get<std::string>(), s.at("y").get<std::string>(),
                    y_scale));
            } else {
                const Table t = load_table(csv);
                out.push_back(series_from_table(
                    t, s.value("name", std::string("series")),
                    s.at("x").get<std::string>(), s.at("y").get<std::string>(),
                    y_scale));
            }
        }
        return out;
    };

    if (!spec.contains("series") || spec["series"].empty())
        throw MissingColumnError("plot spec has no series");
    const std::vector<PlotSeries> series = build_series(spec["series"]);

    PlotConfig cfg;
    cfg.title = spec.value("title", std::string());
    cfg.x_label = spec.value("x_label", std::string());
    cfg.y_label = spec.value("y_label", std::string());
    cfg.x_log = spec.value("x_log", false);
    cfg.y_log = spec.value("y_log", false);
    cfg.width = spec.value("width", 720);
    cfg.height = spec.value("height", 520);

    std::optional<InsetConfig> inset;
    if (spec.contains("inset")) {
        InsetConfig ic;
        const auto& ij = spec["inset"];
        if (ij.contains("region") && ij["region"].size() == 4) {
            ic.rx = ij["region"][0].get<double>();
            ic.ry = ij["region"][1].get<double>();
            ic.rw = ij["region"][2].get<double>();
            ic.rh = ij["region"][3].get<double>();
        }
        if (!ij.contains("series") || ij["series"].empty())
            throw MissingColumnError("plot inset has no series");
        ic.series = build_series(ij["series"]);
        ic.x_label = ij.value("x_label", std::string());
        ic.y_label = ij.value("y_label", std::string());
        inset = std::move(ic);
    }

    write_file(c.out, render_svg(series, cfg, inset));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-electron ion entropies and mutual information"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "flat key=value config file; flags override");
    app.require_subcommand(1);

    auto* opt_cmd = app.add_subcommand("optimize", "variational optimization at one Z");
    std::string opt_kind;
    double opt_z = 2.0;
    CommonOpts opt_common;
    opt_cmd->add_option("--kind", opt_kind, "singlet|triplet|ni-triplet")->required();
    opt_cmd->add_option("--z", opt_z, "nuclear charge")->required();
    add_common(opt_cmd, opt_common);

    auto* sweep_cmd = app.add_subcommand("sweep", "isoelectronic series sweep to CSV");
    std::string sweep_kind;
    double z_min = 2.0, z_max = 30.0, step = 1.0;
    bool no_cache = false;
    CommonOpts sweep_common;
    sweep_cmd->add_option("--kind", sweep_kind,
                          "singlet|triplet|ni-triplet|hydrogenic")->required();
    sweep_cmd->add_option("--z-min", z_min, "first Z")->required();
    sweep_cmd->add_option("--z-max", z_max, "last Z")->required();
    sweep_cmd->add_option("--step", step, "Z step (default 1)");
    sweep_cmd->add_flag("--no-cache", no_cache, "recompute every row");
    add_common(sweep_cmd, sweep_common);

    auto* cross_cmd = app.add_subcommand("crossover", "crossover Z by bisection");
    std::string cross_kind, cross_q;
    double z_lo = 1.0, z_hi = 2.0, z_tol = 1e-3;
    CommonOpts cross_common;
    cross_cmd->add_option("--kind", cross_kind, "hydrogenic|singlet|triplet|ni-triplet")->required();
    cross_cmd->add_option("--quantity", cross_q,
                          "one-electron-entropy|two-electron-entropy|mutual-information")
        ->required();
    cross_cmd->add_option("--z-lo", z_lo, "bracket low end")->required();
    cross_cmd->add_option("--z-hi", z_hi, "bracket high end")->required();
    cross_cmd->add_option("--z-tol", z_tol, "bracket width tolerance");
    add_common(cross_cmd, cross_common);

    auto* prof_cmd = app.add_subcommand("profile", "radial profile curve to CSV");
    std::string prof_kind, prof_q;
    double prof_z = 2.0, grid_min = 1e-3, grid_max = 10.0;
    int grid_points = 0;
    CommonOpts prof_common;
    prof_cmd->add_option("--kind", prof_kind, "hydrogenic|singlet|triplet|ni-triplet")->required();
    prof_cmd->add_option("--z", prof_z, "nuclear charge")->required();
    prof_cmd->add_option("--quantity", prof_q,
                         "entropy-density-r|entropy-density-p|info-density-p|radial-momentum")
        ->required();
    prof_cmd->add_option("--grid-min", grid_min, "grid start");
    prof_cmd->add_option("--grid-max", grid_max, "grid end");
    prof_cmd->add_option("--grid-points", grid_points,
                         "number of log-spaced points (0 = default grid)");
    add_common(prof_cmd, prof_common);

    auto* plot_cmd = app.add_subcommand("plot", "render CSV columns to SVG");
    std::string plot_input, plot_spec;
    CommonOpts plot_common;
    plot_cmd->add_option("--input", plot_input, "input CSV")->required();
    plot_cmd->add_option("--spec", plot_spec, "plot spec JSON")->required();
    add_common(plot_cmd, plot_common);

    try {
        app.parse(argc, argv);
        if (opt_cmd->parsed()) return cmd_optimize(opt_kind, opt_z, opt_common);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_kind, z_min, z_max, step, no_cache, sweep_common);
        if (cross_cmd->parsed())
            return cmd_crossover(cross_kind, cross_q, z_lo, z_hi, z_tol, cross_common);
        if (prof_cmd->parsed())
            return cmd_profile(prof_kind, prof_z, prof_q, grid_min, grid_max,
                               grid_points, prof_common);
        if (plot_cmd->parsed())
            return cmd_plot(plot_input, plot_spec, plot_common);
        return kExitError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const NoBoundStateError& e) {
        std::cerr << "error: no bound state: " << e.what() << "\n";
        return kExitNoBoundState;
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: no convergence: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
