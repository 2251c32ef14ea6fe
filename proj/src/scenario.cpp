#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "errors.hpp"
#include "observables.hpp"

namespace dkc {

namespace {

constexpr char k_version[] = "0.1.0";

double initial_dx() { return 1.0 / std::sqrt(2.0); }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a != std::string::npos)
            out.push_back(item.substr(a, b - a + 1));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// Artifacts are staged in memory and written only after every computation
// succeeded, so a failing scenario leaves no partial outputs.
class Emitter {
public:
    void note(const std::string& key, const std::string& value) {
        notes_.emplace_back(key, value);
    }
    void note(const std::string& key, double value) {
        note(key, format_double_12(value));
    }
    void add(const std::string& name, std::string content) {
        artifacts_.push_back({name, std::move(content)});
    }

    RunResult write(const std::string& out_dir, const std::string& command) const {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        RunResult result;
        std::string manifest = "# dkc manifest\n";
        manifest += "version = " + std::string(k_version) + "\n";
        manifest += "command = " + command + "\n";
        for (const auto& [k, v] : notes_)
            manifest += k + " = " + v + "\n";
        for (const auto& a : artifacts_) {
            std::ofstream f(fs::path(out_dir) / a.name, std::ios::binary);
            if (!f)
                fail_config("cannot write output file " + a.name);
            f << a.content;
            manifest += "file = " + a.name + "\n";
            result.files.push_back(a.name);
        }
        manifest += "file = manifest.txt\n";
        std::ofstream mf(fs::path(out_dir) / "manifest.txt", std::ios::binary);
        mf << manifest;
        result.files.push_back("manifest.txt");
        return result;
    }

private:
    struct Artifact {
        std::string name;
        std::string content;
    };
    std::vector<Artifact> artifacts_;
    std::vector<std::pair<std::string, std::string>> notes_;
};

std::string csv_summary(const std::vector<std::pair<std::string, MomentSummary>>& rows,
                        const PhysicalScale& scale) {
    std::string out = "# units: natural\n";
    bool si = scale.has_si();
    out += "stage,dx,dp,dv,uncertainty_product,temperature_natural,momentum_kurtosis";
    if (si)
        out += ",temperature_kelvin";
    out += "\n";
    for (const auto& [label, s] : rows) {
        out += label;
        for (double v : {s.dx, s.dp, s.dv, s.uncertainty_product, s.temperature_natural,
                         s.momentum_kurtosis})
            out += "," + format_double_12(v);
        if (si)
            out += "," + format_double_12(
                             natural_to_si_temperature(velocity_to_si(s.dv, scale), scale));
        out += "\n";
    }
    return out;
}

std::string csv_distribution(const Distribution& d, const std::string& coord_name,
                             double window) {
    std::string out = "# units: natural\n" + coord_name + ",density\n";
    for (std::size_t i = 0; i < d.coordinate.size(); ++i) {
        if (std::abs(d.coordinate[i]) > window)
            continue;
        out += format_double_12(d.coordinate[i]) + "," + format_double_12(d.density[i]) + "\n";
    }
    return out;
}

std::string csv_wigner(const WignerMap& map, double x_window) {
    std::string out = "# units: natural\nx,p,w\n";
    for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
        if (std::abs(map.x_axis[i]) > x_window)
            continue;
        for (std::size_t k = 0; k < map.p_axis.size(); ++k)
            out += format_double_12(map.x_axis[i]) + "," + format_double_12(map.p_axis[k]) +
                   "," + format_double_12(map.at(i, k)) + "\n";
    }
    return out;
}

std::string csv_sweep(const SweepCurve& curve, std::size_t n_kappa) {
    std::string out = "# units: natural\nt_f,dx_ratio,dv_ratio";
    for (std::size_t i = 1; i <= n_kappa; ++i)
        out += ",kappa_" + std::to_string(i);
    out += "\n";
    for (const auto& pt : curve.points) {
        if (!pt.ok)
            continue;
        out += format_double_12(pt.t_f) + "," + format_double_12(pt.dx_ratio) + "," +
               format_double_12(pt.dv_ratio);
        for (double k : pt.strengths)
            out += "," + format_double_12(k);
        out += "\n";
    }
    return out;
}

std::string csv_sensitivity(const SensitivityMap& map) {
    std::string out = "# units: natural\nscale1,scale2,dp_ratio\n";
    for (std::size_t i = 0; i < map.scale1.size(); ++i)
        for (std::size_t j = 0; j < map.scale2.size(); ++j)
            out += format_double_12(map.scale1[i]) + "," + format_double_12(map.scale2[j]) +
                   "," + format_double_12(map.at(i, j)) + "\n";
    return out;
}

SpatialGrid padded_grid(const ExpansionProtocol& protocol, double factor) {
    SpatialGrid g = auto_grid(protocol);
    if (factor <= 1.0)
        return g;
    double l = g.half_extent * factor;
    int n = g.num_points;
    while (n < static_cast<double>(g.num_points) * factor) {
        n *= 2;
        if (n > (1 << 22))
            fail_resource("padded grid would exceed 2^22 points");
    }
    return SpatialGrid(n, l);
}

int auto_downsample(const SpatialGrid& grid, int target_rows) {
    int d = 1;
    while (grid.num_points / (2 * d) >= target_rows)
        d *= 2;
    return d;
}

struct ResolvedProtocol {
    ExpansionProtocol protocol;
    std::vector<double> sigmas;    // gaussian case
    std::vector<double> strengths; // gaussian case
    std::optional<DesignResult> design;
    std::optional<OptimizationReport> optimization;
};

int budget_or_default(const Scenario& sc, std::size_t n_params) {
    return sc.optimize_budget > 0 ? sc.optimize_budget
                                  : static_cast<int>(200 * n_params + 100);
}

ResolvedProtocol resolve_protocol(const Scenario& sc) {
    ResolvedProtocol r;
    r.protocol.expansion_time = sc.expansion_time;
    if (sc.harmonic) {
        double strength = sc.harmonic_strength
                              ? *sc.harmonic_strength
                              : harmonic_kick_strength(sc.expansion_time).strength;
        r.protocol.kick = HarmonicKick{strength};
        return r;
    }
    if (sc.design_mode == "explicit") {
        if (sc.explicit_kicks.empty())
            fail_config("explicit design mode requires kicks[]");
        KickSequence seq{sc.explicit_kicks};
        for (const auto& k : seq.kicks) {
            r.sigmas.push_back(k.width);
            r.strengths.push_back(k.strength);
        }
        r.protocol.kick = seq;
        return r;
    }
    if (sc.widths.empty())
        fail_config("design mode '" + sc.design_mode + "' requires widths[] and expansion_time");
    r.sigmas = sc.widths;
    if (sc.design_mode == "classical") {
        r.design = design_kicks(sc.widths, sc.expansion_time, DriveKind::focal);
        r.strengths = r.design->strengths;
    } else if (sc.design_mode == "generalized") {
        r.design = design_kicks(sc.widths, sc.expansion_time, DriveKind::scaling);
        r.strengths = r.design->strengths;
    } else if (sc.design_mode == "optimized") {
        r.design = design_kicks(sc.widths, sc.expansion_time, DriveKind::scaling);
        r.optimization = optimize_strengths(sc.widths, sc.expansion_time, *r.design,
                                            budget_or_default(sc, sc.widths.size()));
        r.strengths = r.optimization->best_strengths;
    } else {
        fail_config("unknown design_mode '" + sc.design_mode + "'");
    }
    r.protocol.kick = to_kick_sequence(r.sigmas, r.strengths);
    return r;
}

void note_protocol(Emitter& em, const Scenario& sc, const ResolvedProtocol& r) {
    em.note("expansion_time", sc.expansion_time);
    em.note("design_mode", sc.harmonic ? "harmonic" : sc.design_mode);
    if (sc.harmonic) {
        em.note("harmonic_strength", std::get<HarmonicKick>(r.protocol.kick).strength);
        return;
    }
    for (std::size_t i = 0; i < r.sigmas.size(); ++i) {
        em.note("sigma[" + std::to_string(i) + "]", r.sigmas[i]);
        em.note("kappa[" + std::to_string(i) + "]", r.strengths[i]);
    }
    if (r.design) {
        em.note("design_drive", r.design->rhs_value);
        em.note("design_condition", r.design->condition_estimate);
    }
    if (r.optimization) {
        em.note("objective_evaluations",
                std::to_string(r.optimization->objective_evaluations));
        em.note("optimizer_converged", r.optimization->converged ? "true" : "false");
    }
}

SweepMode parse_sweep_mode(const std::string& name) {
    if (name == "harmonic")
        return SweepMode::harmonic;
    if (name == "classical")
        return SweepMode::classical;
    if (name == "optimized")
        return SweepMode::optimized;
    fail_config("unknown sweep mode '" + name + "'");
}

void run_simulate(const Scenario& sc, Emitter& em, bool wigner_only) {
    ResolvedProtocol r = resolve_protocol(sc);
    note_protocol(em, sc, r);
    SpatialGrid grid = padded_grid(r.protocol, sc.extent_factor);
    WaveState gs = make_ground_state(grid);
    MomentSummary initial = summarize(gs);
    WaveState expanded = propagate_free(gs, sc.expansion_time);
    MomentSummary at_kick = summarize(expanded);
    WaveState kicked =
        std::holds_alternative<HarmonicKick>(r.protocol.kick)
            ? apply_harmonic_kick(expanded, std::get<HarmonicKick>(r.protocol.kick))
            : apply_gaussian_kicks(expanded, std::get<KickSequence>(r.protocol.kick));
    MomentSummary final_summary = summarize(kicked);
    em.note("cooling_ratio", cooling_ratio(initial, final_summary));

    auto wants = [&](const std::string& name) {
        if (wigner_only)
            return name == "wigner";
        if (sc.outputs.empty())
            return name == "summary";
        return std::find(sc.outputs.begin(), sc.outputs.end(), name) != sc.outputs.end();
    };

    if (wants("summary"))
        em.add("summary.csv", csv_summary({{"initial", initial},
                                           {"at_kick", at_kick},
                                           {"final", final_summary}},
                                          sc.scale));
    double dp_i = initial.dp;
    if (wants("momentum_distribution"))
        em.add("momentum_distribution.csv",
               csv_distribution(momentum_distribution(kicked), "p", 6.0 * dp_i));
    if (wants("wigner")) {
        int d = sc.wigner_downsample > 0 ? sc.wigner_downsample
                                         : auto_downsample(grid, 192);
        WignerMap map = wigner(kicked, d, 4.0 * dp_i);
        em.add("wigner.csv", csv_wigner(map, 6.0 * at_kick.dx));
    }
}

void run_design(const Scenario& sc, Emitter& em) {
    if (sc.harmonic) {
        ResolvedProtocol r = resolve_protocol(sc);
        note_protocol(em, sc, r);
        Config out;
        out.set("expansion_time", format_double(sc.expansion_time));
        out.set("harmonic", "true");
        out.set("harmonic_strength",
                format_double(std::get<HarmonicKick>(r.protocol.kick).strength));
        em.add("designed_kicks.cfg", out.serialize());
        return;
    }
    if (sc.design_mode == "explicit")
        fail_config("design command needs a non-explicit design_mode");
    ResolvedProtocol r = resolve_protocol(sc);
    note_protocol(em, sc, r);
    Config out;
    out.set("expansion_time", format_double(sc.expansion_time));
    out.set("design_mode", "explicit");
    for (std::size_t i = 0; i < r.sigmas.size(); ++i) {
        std::string head = "kicks[" + std::to_string(i) + "]";
        // widths go back out in units of Delta x_i, as they came in
        out.set(head + ".width", format_double(r.sigmas[i] / initial_dx()));
        out.set(head + ".strength", format_double(r.strengths[i]));
    }
    em.add("designed_kicks.cfg", out.serialize());
}

void run_sweep(const Scenario& sc, Emitter& em, int threads) {
    SweepMode mode;
    if (!sc.sweep_mode.empty())
        mode = parse_sweep_mode(sc.sweep_mode);
    else if (sc.harmonic)
        mode = SweepMode::harmonic;
    else
        mode = sc.design_mode == "optimized" ? SweepMode::optimized : SweepMode::classical;
    if (mode != SweepMode::harmonic && sc.widths.empty())
        fail_config("sweep requires widths[]");

    std::vector<double> ts = linspace(sc.sweep_t_min, sc.sweep_t_max, sc.sweep_points);
    SweepCurve curve = sweep_expansion(sc.widths, ts, mode,
                                       sc.optimize_budget, threads);
    em.note("sweep_points", std::to_string(sc.sweep_points));
    if (curve.argmin >= 0) {
        em.note("argmin_t_f", curve.points[curve.argmin].t_f);
        em.note("argmin_dv_ratio", curve.points[curve.argmin].dv_ratio);
    }
    for (const auto& pt : curve.points)
        if (!pt.ok)
            em.note("failed_t_f_" + format_double_12(pt.t_f), pt.error);
    em.add("sweep.csv", csv_sweep(curve, mode == SweepMode::harmonic ? 1 : sc.widths.size()));
}

void run_sensitivity(const Scenario& sc, Emitter& em, int threads) {
    if (sc.widths.size() != 2)
        fail_config("sensitivity requires exactly two widths");
    std::vector<double> axis =
        linspace(sc.sensitivity_min, sc.sensitivity_max, sc.sensitivity_points);
    SensitivityMap map = sensitivity_map(sc.widths[0], sc.widths[1], sc.expansion_time,
                                         axis, axis, threads);
    em.note("expansion_time", sc.expansion_time);
    em.add("sensitivity.csv", csv_sensitivity(map));
}

} // namespace

const char* library_version() { return k_version; }

Scenario Scenario::from_config(const Config& cfg) {
    Scenario sc;
    if (cfg.has("mass"))
        sc.scale.si_mass = cfg.require_double("mass");
    if (cfg.has("omega0"))
        sc.scale.si_omega0 = cfg.require_double("omega0");
    if (sc.scale.si_mass.has_value() != sc.scale.si_omega0.has_value())
        fail_config("SI overrides need both 'mass' and 'omega0'");
    if (sc.scale.has_si() && (*sc.scale.si_mass <= 0.0 || *sc.scale.si_omega0 <= 0.0))
        fail_config("SI overrides must be strictly positive");

    sc.expansion_time = cfg.get_double("expansion_time", 0.0);
    if (sc.expansion_time < 0.0)
        fail_config("expansion_time must be non-negative");
    sc.harmonic = cfg.get_bool("harmonic", false);
    if (cfg.has("harmonic_strength"))
        sc.harmonic_strength = cfg.require_double("harmonic_strength");

    std::size_t n_kicks = cfg.array_size("kicks");
    for (std::size_t i = 0; i < n_kicks; ++i) {
        std::string head = "kicks[" + std::to_string(i) + "]";
        GaussianKick k;
        k.strength = cfg.require_double(head + ".strength");
        k.width = cfg.require_double(head + ".width") * initial_dx();
        if (!(k.width > 0.0))
            fail_config(head + ".width must be positive");
        sc.explicit_kicks.push_back(k);
    }
    std::size_t n_widths = cfg.array_size("widths");
    for (std::size_t i = 0; i < n_widths; ++i) {
        double w = cfg.require_double("widths[" + std::to_string(i) + "]") * initial_dx();
        if (!(w > 0.0))
            fail_config("widths[] entries must be positive");
        sc.widths.push_back(w);
    }

    sc.design_mode = cfg.get_string("design_mode",
                                    sc.explicit_kicks.empty() ? "classical" : "explicit");
    if (sc.design_mode == "explicit" && !sc.harmonic && sc.explicit_kicks.empty() &&
        !sc.widths.empty())
        fail_config("widths[] given but design_mode is explicit; set a design mode");

    if (cfg.has("outputs"))
        sc.outputs = split_list(cfg.require_string("outputs"));

    sc.sweep_t_min = cfg.get_double("sweep.t_min", sc.sweep_t_min);
    sc.sweep_t_max = cfg.get_double("sweep.t_max", sc.sweep_t_max);
    sc.sweep_points = cfg.get_int("sweep.points", sc.sweep_points);
    sc.sweep_mode = cfg.get_string("sweep.mode", "");
    if (sc.sweep_points < 2)
        fail_config("sweep.points must be at least 2");

    sc.sensitivity_min = cfg.get_double("sensitivity.min", sc.sensitivity_min);
    sc.sensitivity_max = cfg.get_double("sensitivity.max", sc.sensitivity_max);
    sc.sensitivity_points = cfg.get_int("sensitivity.points", sc.sensitivity_points);
    if (sc.sensitivity_points < 2)
        fail_config("sensitivity.points must be at least 2");

    sc.wigner_downsample = cfg.get_int("wigner.downsample", 0);
    sc.optimize_budget = cfg.get_int("optimize.budget", 0);
    sc.extent_factor = cfg.get_double("grid.extent_factor", 1.0);
    if (sc.extent_factor < 1.0)
        fail_config("grid.extent_factor must be >= 1");
    return sc;
}

RunResult run_scenario(const Scenario& scenario, const std::string& command,
                       const std::string& out_dir, int threads) {
    Emitter em;
    if (command == "simulate")
        run_simulate(scenario, em, false);
    else if (command == "wigner")
        run_simulate(scenario, em, true);
    else if (command == "design")
        run_design(scenario, em);
    else if (command == "sweep")
        run_sweep(scenario, em, threads);
    else if (command == "sensitivity")
        run_sensitivity(scenario, em, threads);
    else
        fail_config("unknown command '" + command + "'");
    return em.write(out_dir, command);
}

namespace {

std::vector<double> scaled_widths(const std::vector<double>& in_dx_i) {
    std::vector<double> out;
    for (double w : in_dx_i)
        out.push_back(w * initial_dx());
    return out;
}

// Coarse sweep then golden-section refinement of the best focal time.
SweepPoint best_focal_time(const std::vector<double>& sigmas, SweepMode mode,
                           double t_lo, double t_hi, int coarse_points, int threads) {
    std::vector<double> ts = linspace(t_lo, t_hi, coarse_points);
    SweepCurve coarse = sweep_expansion(sigmas, ts, mode, 0, threads);
    if (coarse.argmin < 0)
        fail_physics("focal-time search failed at every sweep point");
    int i = coarse.argmin;
    double lo = ts[std::max(0, i - 1)];
    double hi = ts[std::min<int>(coarse_points - 1, i + 1)];
    return refine_optimal_time(sigmas, mode, lo, hi);
}

void reproduce_fig1(Emitter& em, int threads) {
    (void)threads;
    const double t_f = 1.5;
    const std::vector<std::vector<double>> width_sets = {
        {5.0}, {5.0, 4.0}, {5.0, 4.0, 3.0}};

    // One grid for all four maps so the axes line up.
    ExpansionProtocol finest{t_f, to_kick_sequence(scaled_widths(width_sets.back()),
                                                   {1.0, -1.0, 1.0})};
    SpatialGrid grid = auto_grid(finest);
    int d = auto_downsample(grid, 128);
    double dp_i = 1.0 / std::sqrt(2.0);
    double x_window = 6.0 * initial_dx() * std::sqrt(1.0 + t_f * t_f);

    WaveState gs = make_ground_state(grid);
    WaveState expanded = propagate_free(gs, t_f);
    em.add("fig1_free.csv", csv_wigner(wigner(expanded, d, 4.0 * dp_i), x_window));

    for (std::size_t n = 0; n < width_sets.size(); ++n) {
        std::vector<double> sigmas = scaled_widths(width_sets[n]);
        DesignResult seed = design_kicks(sigmas, t_f, DriveKind::scaling);
        OptimizationReport opt =
            optimize_strengths(sigmas, t_f, seed, 200 * static_cast<int>(sigmas.size()) + 100);
        WaveState kicked =
            apply_gaussian_kicks(expanded, to_kick_sequence(sigmas, opt.best_strengths));
        std::string name = "fig1_kick" + std::to_string(n + 1) + ".csv";
        em.add(name, csv_wigner(wigner(kicked, d, 4.0 * dp_i), x_window));
        for (std::size_t i = 0; i < sigmas.size(); ++i)
            em.note("fig1_kick" + std::to_string(n + 1) + "_kappa[" + std::to_string(i) + "]",
                    opt.best_strengths[i]);
    }
    em.note("t_f", t_f);
}

const std::vector<std::vector<double>> k_fig2_width_sets = {
    {15.0}, {15.0, 14.0}, {15.0, 13.0, 14.0}};

void reproduce_fig2(Emitter& em, int threads) {
    const double t_lo = 2.0, t_hi = 60.0;
    const int points = 24;
    std::vector<double> ts = linspace(t_lo, t_hi, points);

    SweepCurve harmonic = sweep_expansion({}, ts, SweepMode::harmonic, 0, threads);
    em.add("fig2_harmonic.csv", csv_sweep(harmonic, 1));

    const char* labels[] = {"singlet", "doublet", "triplet"};
    for (std::size_t n = 0; n < k_fig2_width_sets.size(); ++n) {
        std::vector<double> sigmas = scaled_widths(k_fig2_width_sets[n]);
        SweepCurve classical = sweep_expansion(sigmas, ts, SweepMode::classical, 0, threads);
        SweepCurve optimized = sweep_expansion(sigmas, ts, SweepMode::optimized, 0, threads);
        em.add("fig2_" + std::string(labels[n]) + "_classical.csv",
               csv_sweep(classical, sigmas.size()));
        em.add("fig2_" + std::string(labels[n]) + "_optimized.csv",
               csv_sweep(optimized, sigmas.size()));

        SweepPoint best = best_focal_time(sigmas, SweepMode::optimized, t_lo, t_hi,
                                          points, threads);
        em.note("t_" + std::to_string(n + 1), best.t_f);
        em.note("dv_ratio_" + std::to_string(n + 1), best.dv_ratio);
    }
}

void reproduce_fig4(Emitter& em, int threads) {
    std::vector<SweepPoint> best(3);
    for (std::size_t n = 0; n < 3; ++n)
        best[n] = best_focal_time(scaled_widths(k_fig2_width_sets[n]), SweepMode::optimized,
                                  2.0, 60.0, 24, threads);
    for (std::size_t n = 0; n < 3; ++n)
        em.note("t_" + std::to_string(n + 1), best[n].t_f);

    auto distribution_csv = [&](const ExpansionProtocol& protocol) {
        SpatialGrid grid = padded_grid(protocol, 2.0);
        WaveState gs = make_ground_state(grid);
        WaveState kicked = std::holds_alternative<HarmonicKick>(protocol.kick)
                               ? apply_harmonic_kick(propagate_free(gs, protocol.expansion_time),
                                                     std::get<HarmonicKick>(protocol.kick))
                               : apply_gaussian_kicks(propagate_free(gs, protocol.expansion_time),
                                                      std::get<KickSequence>(protocol.kick));
        return csv_distribution(momentum_distribution(kicked), "p", 4.0 / std::sqrt(2.0));
    };

    // (a): everything at t_f = t_1; (b): t_1, t_2, t_3 and the harmonic
    // reference at t_3.
    for (int variant = 0; variant < 2; ++variant) {
        std::string tag = variant == 0 ? "fig4a" : "fig4b";
        double t_harmonic = variant == 0 ? best[0].t_f : best[2].t_f;
        em.add(tag + "_harmonic.csv",
               distribution_csv({t_harmonic, harmonic_kick_strength(t_harmonic)}));
        for (std::size_t n = 0; n < 3; ++n) {
            double t_f = variant == 0 ? best[0].t_f : best[n].t_f;
            std::vector<double> sigmas = scaled_widths(k_fig2_width_sets[n]);
            DesignResult seed = design_kicks(sigmas, t_f, DriveKind::scaling);
            OptimizationReport opt = optimize_strengths(
                sigmas, t_f, seed, 200 * static_cast<int>(sigmas.size()) + 100);
            em.add(tag + "_kick" + std::to_string(n + 1) + ".csv",
                   distribution_csv({t_f, to_kick_sequence(sigmas, opt.best_strengths)}));
        }
    }
}

void reproduce_fig5(Emitter& em, int threads) {
    std::vector<double> sigmas = scaled_widths({15.0, 14.0});
    SweepPoint best = best_focal_time(sigmas, SweepMode::optimized, 2.0, 60.0, 24, threads);
    double t_2 = best.t_f;
    em.note("t_2", t_2);

    std::vector<double> axis = linspace(0.9, 1.1, 41);
    SensitivityMap map = sensitivity_map(sigmas[0], sigmas[1], t_2, axis, axis, threads);
    em.add("fig5_map.csv", csv_sensitivity(map));

    DesignResult classical = design_kicks(sigmas, t_2, DriveKind::scaling);
    KickObjective objective(sigmas, t_2, classical.strengths);
    double dp_i = objective.initial().dp;
    double classical_value = dp_i / objective(classical.strengths);
    OptimizationReport opt = optimize_strengths(sigmas, t_2, classical, 700);
    double optimized_value = dp_i / opt.best_dp;

    std::string pts = "# units: natural\nlabel,scale1,scale2,dp_ratio\n";
    pts += "classical,1,1," + format_double_12(classical_value) + "\n";
    pts += "optimized," + format_double_12(opt.best_strengths[0] / classical.strengths[0]) +
           "," + format_double_12(opt.best_strengths[1] / classical.strengths[1]) + "," +
           format_double_12(optimized_value) + "\n";
    em.add("fig5_points.csv", pts);
}

} // namespace

RunResult reproduce_figures(const std::string& which, const std::string& out_dir,
                            int threads) {
    Emitter em;
    if (which == "fig1")
        reproduce_fig1(em, threads);
    else if (which == "fig2")
        reproduce_fig2(em, threads);
    else if (which == "fig4")
        reproduce_fig4(em, threads);
    else if (which == "fig5")
        reproduce_fig5(em, threads);
    else
        fail_config("unknown figure '" + which + "' (expected fig1|fig2|fig4|fig5)");
    return em.write(out_dir, "reproduce " + which);
}

} // namespace dkc
