#include "optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "errors.hpp"

namespace dkc {

namespace {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    int nt = std::max(1, threads);
    if (nt == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (int w = 0; w < nt; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += nt)
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

int default_budget(std::size_t n_params) {
    return static_cast<int>(200 * n_params + 100);
}

} // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
    const std::size_t n = x0.size();
    if (n == 0)
        fail_config("nelder_mead needs at least one parameter");

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, shrink = 0.5;

    std::vector<std::vector<double>> xs(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        double step = opts.init_step_rel * std::abs(x0[i]);
        if (step == 0.0)
            step = opts.init_step_rel;
        xs[i + 1][i] += step;
    }

    int evals = 0;
    bool exhausted = false;
    auto eval = [&](const std::vector<double>& x) {
        if (evals >= opts.max_evals) {
            exhausted = true;
            return std::numeric_limits<double>::infinity();
        }
        ++evals;
        return f(x);
    };
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        fs[i] = eval(xs[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        std::vector<std::vector<double>> xs2(n + 1);
        std::vector<double> fs2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            xs2[i] = xs[idx[i]];
            fs2[i] = fs[idx[i]];
        }
        xs.swap(xs2);
        fs.swap(fs2);
    };

    auto simplex_size = [&] {
        double scale = 0.0, size = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            scale = std::max(scale, std::abs(xs[0][i]));
        scale = std::max(scale, 1.0);
        for (std::size_t v = 1; v <= n; ++v)
            for (std::size_t i = 0; i < n; ++i)
                size = std::max(size, std::abs(xs[v][i] - xs[0][i]));
        return size / scale;
    };

    bool converged = false;
    while (!exhausted && evals < opts.max_evals) {
        order();
        if (simplex_size() < opts.tol_rel) {
            converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < n; ++i)
                centroid[i] += xs[v][i] / n;

        auto blend = [&](const std::vector<double>& from, double c) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i)
                p[i] = centroid[i] + c * (from[i] - centroid[i]);
            return p;
        };

        std::vector<double> xr = blend(xs[n], -alpha);
        double fr = eval(xr);
        if (fr < fs[0]) {
            std::vector<double> xe = blend(xs[n], -gamma);
            double fe = eval(xe);
            if (fe < fr) {
                xs[n] = xe;
                fs[n] = fe;
            } else {
                xs[n] = xr;
                fs[n] = fr;
            }
        } else if (fr < fs[n - 1]) {
            xs[n] = xr;
            fs[n] = fr;
        } else {
            bool outside = fr < fs[n];
            std::vector<double> xc = blend(xs[n], outside ? -rho : rho);
            double fc = eval(xc);
            if (fc < std::min(fr, fs[n])) {
                xs[n] = xc;
                fs[n] = fc;
            } else {
                for (std::size_t v = 1; v <= n; ++v) {
                    for (std::size_t i = 0; i < n; ++i)
                        xs[v][i] = xs[0][i] + shrink * (xs[v][i] - xs[0][i]);
                    fs[v] = eval(xs[v]);
                }
            }
        }
    }
    order();
    return {xs[0], fs[0], evals, converged};
}

ProtocolOutcome simulate_protocol(const ExpansionProtocol& protocol,
                                  const std::optional<SpatialGrid>& grid) {
    SpatialGrid g = grid ? *grid : auto_grid(protocol);
    WaveState gs = make_ground_state(g);
    ProtocolOutcome out;
    out.initial = summarize(gs);
    WaveState expanded = propagate_free(gs, protocol.expansion_time);
    out.at_kick = summarize(expanded);
    WaveState kicked = std::holds_alternative<HarmonicKick>(protocol.kick)
                           ? apply_harmonic_kick(expanded, std::get<HarmonicKick>(protocol.kick))
                           : apply_gaussian_kicks(expanded, std::get<KickSequence>(protocol.kick));
    out.final_summary = summarize(kicked);
    return out;
}

KickObjective::KickObjective(std::vector<double> sigmas, double t_f,
                             const std::vector<double>& seed_strengths)
    : sigmas_(std::move(sigmas)) {
    // Grid sized for twice the seed strengths so the search has headroom.
    std::vector<double> padded = seed_strengths;
    for (auto& s : padded) {
        s *= 2.0;
        caps_.push_back(std::max(std::abs(s), 1.0));
    }
    ExpansionProtocol protocol{t_f, to_kick_sequence(sigmas_, padded)};
    SpatialGrid grid = auto_grid(protocol);
    WaveState gs = make_ground_state(grid);
    initial_ = summarize(gs);
    expanded_ = propagate_free(gs, t_f);
    at_kick_ = summarize(expanded_);
}

double KickObjective::operator()(const std::vector<double>& strengths) const {
    for (std::size_t i = 0; i < strengths.size(); ++i)
        if (std::abs(strengths[i]) > caps_[i])
            return std::numeric_limits<double>::infinity();
    WaveState kicked = apply_gaussian_kicks(expanded_, to_kick_sequence(sigmas_, strengths));
    return momentum_moments(kicked).rms;
}

OptimizationReport optimize_strengths(const std::vector<double>& sigmas, double t_f,
                                      const DesignResult& seed, int budget) {
    if (seed.strengths.size() != sigmas.size())
        fail_config("seed strength count does not match widths");
    if (budget < 50 * static_cast<int>(sigmas.size()))
        fail_config("optimization budget must be at least 50 per parameter");

    KickObjective objective(sigmas, t_f, seed.strengths);
    NelderMeadOptions opts;
    opts.max_evals = budget;
    NelderMeadResult r = nelder_mead(
        [&](const std::vector<double>& x) { return objective(x); }, seed.strengths, opts);

    OptimizationReport report;
    report.best_strengths = r.x;
    report.best_dp = r.fx;
    report.objective_evaluations = r.evals;
    report.converged = r.converged;
    report.initial_guess = seed.strengths;
    return report;
}

namespace {

SweepPoint evaluate_point(const std::vector<double>& sigmas, double t_f,
                          SweepMode mode, int budget) {
    SweepPoint pt;
    pt.t_f = t_f;
    try {
        if (mode == SweepMode::harmonic) {
            ExpansionProtocol protocol{t_f, harmonic_kick_strength(t_f)};
            ProtocolOutcome out = simulate_protocol(protocol);
            pt.dx_ratio = out.at_kick.dx / out.initial.dx;
            pt.dv_ratio = out.final_summary.dv / out.initial.dv;
            pt.strengths = {std::get<HarmonicKick>(protocol.kick).strength};
        } else {
            DesignResult seed = design_kicks(sigmas, t_f);
            std::vector<double> strengths = seed.strengths;
            KickObjective objective(sigmas, t_f, seed.strengths);
            if (mode == SweepMode::optimized) {
                NelderMeadOptions opts;
                opts.max_evals = budget > 0 ? budget : default_budget(sigmas.size());
                NelderMeadResult r = nelder_mead(
                    [&](const std::vector<double>& x) { return objective(x); },
                    seed.strengths, opts);
                strengths = r.x;
            }
            pt.dx_ratio = objective.at_kick().dx / objective.initial().dx;
            pt.dv_ratio = objective(strengths) / objective.initial().dv;
            pt.strengths = strengths;
        }
        pt.ok = true;
    } catch (const Error& e) {
        pt.ok = false;
        pt.error = e.what();
    }
    return pt;
}

} // namespace

SweepCurve sweep_expansion(const std::vector<double>& sigmas,
                           const std::vector<double>& t_values, SweepMode mode,
                           int budget_per_point, int threads) {
    if (t_values.empty())
        fail_config("sweep needs at least one expansion time");
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        if (!(t_values[i] > 0.0))
            fail_config("sweep times must be positive");
        if (i > 0 && t_values[i] <= t_values[i - 1])
            fail_config("sweep times must be strictly increasing");
    }
    SweepCurve curve;
    curve.points.resize(t_values.size());
    parallel_for(t_values.size(), threads, [&](std::size_t i) {
        curve.points[i] = evaluate_point(sigmas, t_values[i], mode, budget_per_point);
    });
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        if (!curve.points[i].ok)
            continue;
        if (curve.argmin < 0 ||
            curve.points[i].dv_ratio < curve.points[curve.argmin].dv_ratio)
            curve.argmin = static_cast<int>(i);
    }
    return curve;
}

SweepPoint refine_optimal_time(const std::vector<double>& sigmas, SweepMode mode,
                               double t_lo, double t_hi, int budget_per_point,
                               double tol) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo))
        fail_config("invalid refinement bracket");
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;

    auto eval = [&](double t) { return evaluate_point(sigmas, t, mode, budget_per_point); };

    double a = t_lo, b = t_hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    SweepPoint pc = eval(c), pd = eval(d);
    while ((b - a) > tol * 0.5 * (a + b)) {
        bool left = pc.ok && (!pd.ok || pc.dv_ratio < pd.dv_ratio);
        if (left) {
            b = d;
            d = c;
            pd = pc;
            c = b - phi * (b - a);
            pc = eval(c);
        } else {
            a = c;
            c = d;
            pc = pd;
            d = a + phi * (b - a);
            pd = eval(d);
        }
    }
    SweepPoint best = (pc.ok && (!pd.ok || pc.dv_ratio < pd.dv_ratio)) ? pc : pd;
    if (!best.ok)
        fail_physics("focal-time refinement failed: " + best.error);
    return best;
}

SensitivityMap sensitivity_map(double sigma1, double sigma2, double t_f,
                               const std::vector<double>& scale1,
                               const std::vector<double>& scale2, int threads) {
    for (const auto* axis : {&scale1, &scale2})
        for (double s : *axis)
            if (!(s > 0.0) || s > 2.0)
                fail_config("sensitivity scale factors must lie in (0, 2]");

    // The axes are kappa / kappa_cl, so the baseline is the classical design.
    DesignResult classical = design_kicks({sigma1, sigma2}, t_f, DriveKind::focal);
    KickObjective objective({sigma1, sigma2}, t_f, classical.strengths);
    double dp_i = objective.initial().dp;

    SensitivityMap map;
    map.scale1 = scale1;
    map.scale2 = scale2;
    map.values.resize(scale1.size() * scale2.size());
    parallel_for(scale1.size(), threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < scale2.size(); ++j) {
            double dp_f = objective({scale1[i] * classical.strengths[0],
                                     scale2[j] * classical.strengths[1]});
            map.values[i * scale2.size() + j] = dp_i / dp_f;
        }
    });
    return map;
}

} // namespace dkc
