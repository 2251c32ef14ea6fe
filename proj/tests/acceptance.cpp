// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the binary exits non-zero if any criterion fails.
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "design.hpp"
#include "observables.hpp"
#include "optimize.hpp"
#include "wavestate.hpp"

using namespace dkc;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  [%d] %s  (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ---- 1: ideal harmonic lens is exact ------------------------------------

void criterion_harmonic() {
    double worst_dv = 0.0, worst_prod = 0.0;
    for (double t : {0.5, 1.5, 5.0, 20.0}) {
        ExpansionProtocol protocol{t, HarmonicKick{t / (1.0 + t * t)}};
        ProtocolOutcome out = simulate_protocol(protocol);
        double expected = out.initial.dx / out.at_kick.dx;
        double got = out.final_summary.dv / out.initial.dv;
        worst_dv = std::max(worst_dv, std::abs(got / expected - 1.0));
        worst_prod = std::max(worst_prod,
                              std::abs(out.final_summary.uncertainty_product - 0.5));
    }
    report(1, "harmonic lens exactness", worst_dv < 1e-3 && worst_prod < 1e-4,
           "max dv ratio err " + fmt(worst_dv) + ", max |dx*dp - 1/2| " +
               fmt(worst_prod));
}

// ---- 2: doublet closed form ---------------------------------------------

void criterion_doublet() {
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> width(1.0, 30.0);
    std::uniform_real_distribution<double> time(0.5, 100.0);
    double worst = 0.0;
    int tested = 0;
    while (tested < 100) {
        double s1 = width(rng), s2 = width(rng), t_f = time(rng);
        if (std::abs(s1 * s1 - s2 * s2) < 1e-3 * std::max(s1 * s1, s2 * s2))
            continue;
        ++tested;
        double gap = s1 * s1 - s2 * s2;
        double k1 = s1 * s1 * s1 * s1 / (t_f * gap);
        double k2 = -s2 * s2 * s2 * s2 / (t_f * gap);
        DesignResult r = classical_n_kick({s1, s2}, 1.0 / t_f);
        worst = std::max(worst, std::abs(r.strengths[0] / k1 - 1.0));
        worst = std::max(worst, std::abs(r.strengths[1] / k2 - 1.0));
    }
    report(2, "doublet matches closed form on 100 random inputs", worst < 1e-12,
           "max relative deviation " + fmt(worst));
}

// ---- 3: Maclaurin cancellation ------------------------------------------

void criterion_taylor() {
    double t_f = 30.0;
    std::vector<std::vector<double>> cases = {
        {15.0 * kInvSqrt2},
        {15.0 * kInvSqrt2, 14.0 * kInvSqrt2},
        {15.0 * kInvSqrt2, 13.0 * kInvSqrt2, 14.0 * kInvSqrt2}};
    double worst = 0.0;
    for (const auto& sigmas : cases) {
        DesignResult r = classical_n_kick(sigmas, 1.0 / t_f);
        KickSequence seq = to_kick_sequence(sigmas, r.strengths);
        // leading term reproduces the drive
        worst = std::max(worst, std::abs(impulse_taylor_coefficient(seq, 0) *
                                             t_f + 1.0));
        // orders 3, 5, ..., 2N-1 cancel; scale each against its term sizes
        for (std::size_t k = 1; k < sigmas.size(); ++k) {
            double scale = 0.0;
            for (std::size_t j = 0; j < sigmas.size(); ++j)
                scale += std::abs(r.strengths[j]) /
                         std::pow(sigmas[j], 2.0 * k + 2.0);
            worst = std::max(worst,
                             std::abs(impulse_taylor_coefficient(seq, (int)k)) / scale);
        }
    }
    report(3, "impulse Maclaurin coefficients cancel through order 2N-1",
           worst < 1e-9, "max relative residual " + fmt(worst));
}

// ---- 4/5/6: optimized sweeps, plateau, focal-time ordering --------------

struct CurveSummary {
    SweepCurve coarse;
    SweepPoint best;
};

CurveSummary best_over_times(const std::vector<double>& sigmas,
                             const std::vector<double>& ts) {
    CurveSummary cs;
    cs.coarse = sweep_expansion(sigmas, ts, SweepMode::optimized);
    int i = cs.coarse.argmin;
    double lo = ts[std::max(0, i - 1)];
    double hi = ts[std::min<int>((int)ts.size() - 1, i + 1)];
    cs.best = refine_optimal_time(sigmas, SweepMode::optimized, lo, hi);
    if (!cs.best.ok || cs.best.dv_ratio > cs.coarse.points[i].dv_ratio)
        cs.best = cs.coarse.points[i];
    return cs;
}

void criteria_sweeps() {
    std::vector<double> ts;
    for (double t = 2.0; t <= 14.0; t += 2.0)
        ts.push_back(t);
    for (double t = 18.0; t <= 60.0; t += 6.0)
        ts.push_back(t);

    CurveSummary one = best_over_times({15.0 * kInvSqrt2}, ts);
    CurveSummary two = best_over_times({15.0 * kInvSqrt2, 14.0 * kInvSqrt2}, ts);
    CurveSummary three =
        best_over_times({15.0 * kInvSqrt2, 14.0 * kInvSqrt2, 13.0 * kInvSqrt2}, ts);

    // 4: temperature gain (dv_1/dv_N)^2 of 2.5x and 3.2x, each +-20 %
    double gain2 = std::pow(one.best.dv_ratio / two.best.dv_ratio, 2.0);
    double gain3 = std::pow(one.best.dv_ratio / three.best.dv_ratio, 2.0);
    bool ok4 = gain2 > 2.0 && gain2 < 3.0 && gain3 > 2.56 && gain3 < 3.84;
    report(4, "temperature gains of the doublet and triplet", ok4,
           "2-kick gain " + fmt(gain2) + " (want 2.5+-20%), 3-kick gain " +
               fmt(gain3) + " (want 3.2+-20%)");

    // 5: single-lens curve has an interior minimum and a non-decreasing tail
    const SweepCurve& c1 = one.coarse;
    bool interior = c1.argmin > 0 && c1.argmin < (int)c1.points.size() - 1;
    bool tail_ok = true;
    double tail_worst = 0.0;
    for (std::size_t i = c1.argmin + 1; i < c1.points.size(); ++i) {
        if (!c1.points[i].ok || !c1.points[i - 1].ok) {
            tail_ok = false;
            continue;
        }
        double drop = c1.points[i - 1].dv_ratio - c1.points[i].dv_ratio;
        tail_worst = std::max(tail_worst, drop);
        if (drop > 1e-6 * c1.points[i].dv_ratio)
            tail_ok = false;
    }
    report(5, "single-lens plateau past the optimum", interior && tail_ok,
           "argmin index " + std::to_string(c1.argmin) + "/" +
               std::to_string(c1.points.size() - 1) + ", worst tail drop " +
               fmt(tail_worst));

    // 6: optimal focal times are ordered t_1 < t_2 < t_3
    bool ok6 = one.best.t_f < two.best.t_f && two.best.t_f < three.best.t_f;
    report(6, "focal times increase with kick count", ok6,
           "t_1 = " + fmt(one.best.t_f) + ", t_2 = " + fmt(two.best.t_f) +
               ", t_3 = " + fmt(three.best.t_f));

    // ---- 7: sensitivity ridge at t_2 ------------------------------------
    double s1 = 15.0 * kInvSqrt2, s2 = 14.0 * kInvSqrt2;
    double t2 = two.best.t_f;
    SensitivityMap map = sensitivity_map(s1, s2, t2, {1.0, 1.05}, {1.0, 1.05});
    double common = map.at(1, 1);   // (1.05, 1.05)
    double one_arm = map.at(1, 0);  // (1.05, 1.00)
    double classical_point = map.at(0, 0);

    DesignResult seed = design_kicks({s1, s2}, t2, DriveKind::scaling);
    OptimizationReport rep = optimize_strengths({s1, s2}, t2, seed, 500);
    double optimized_point = kInvSqrt2 / rep.best_dp;

    bool ok7 = common > one_arm && optimized_point >= classical_point - 1e-9;
    report(7, "strength-ratio sensitivity ridge", ok7,
           "common-scale " + fmt(common) + " vs one-arm " + fmt(one_arm) +
               "; optimized " + fmt(optimized_point) + " vs classical " +
               fmt(classical_point));
}

// ---- 8: engine invariants ------------------------------------------------

void criterion_engine() {
    bool ok = true;
    std::string detail;

    // unitarity across a full protocol
    {
        ExpansionProtocol protocol{20.0, KickSequence{{{29.0948275862069, 15.0 * kInvSqrt2},
                                                       {-22.0781609195402, 14.0 * kInvSqrt2}}}};
        SpatialGrid g = auto_grid(protocol);
        WaveState s = apply_gaussian_kicks(
            propagate_free(make_ground_state(g), 20.0),
            std::get<KickSequence>(protocol.kick));
        double drift = std::abs(s.norm() - 1.0);
        ok = ok && drift < 1e-10;
        detail += "norm drift " + fmt(drift);
    }

    // kick-order permutation equivalence
    {
        SpatialGrid g(2048, 16.0);
        WaveState s = propagate_free(make_ground_state(g), 1.0);
        WaveState a = apply_gaussian_kicks(
            s, KickSequence{{{3.0, 2.5}, {-1.5, 1.5}, {0.7, 3.5}}});
        WaveState b = apply_gaussian_kicks(
            s, KickSequence{{{0.7, 3.5}, {3.0, 2.5}, {-1.5, 1.5}}});
        double diff = 0.0;
        for (std::size_t i = 0; i < a.amp.size(); ++i)
            diff = std::max(diff, std::abs(a.amp[i] - b.amp[i]));
        ok = ok && diff < 1e-13;
        detail += ", permutation " + fmt(diff);
    }

    // free-expansion width oracle
    {
        SpatialGrid g(4096, 24.0);
        WaveState gs = make_ground_state(g);
        double worst = 0.0;
        for (double t : {0.5, 1.0, 2.0, 4.0}) {
            double expected = kInvSqrt2 * std::sqrt(1.0 + t * t);
            double got = position_moments(propagate_free(gs, t)).rms;
            worst = std::max(worst, std::abs(got / expected - 1.0));
        }
        ok = ok && worst < 1e-6;
        detail += ", width oracle " + fmt(worst);
    }

    // Wigner normalization and marginal agreement
    {
        SpatialGrid g(1024, 12.0);
        WaveState s = make_ground_state(g);
        WignerMap map = wigner(s, 4);
        double dxs = map.x_axis[1] - map.x_axis[0];
        double dps = map.p_axis[1] - map.p_axis[0];
        double total = 0.0;
        for (double v : map.values)
            total += v * dxs * dps;
        double dev_x = 0.0;
        for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
            double m = 0.0;
            for (std::size_t k = 0; k < map.p_axis.size(); ++k)
                m += map.at(i, k) * dps;
            int j = (int)std::lround((map.x_axis[i] + g.half_extent) / g.spacing());
            dev_x += std::abs(m - std::norm(s.amp[j])) * dxs;
        }
        ok = ok && std::abs(total - 1.0) < 1e-6 && dev_x < 1e-6;
        detail += ", wigner norm " + fmt(std::abs(total - 1.0)) + ", marginal " +
                  fmt(dev_x);
    }

    report(8, "engine invariants", ok, detail);
}

// ---- 9: Ermakov oracle ---------------------------------------------------

void criterion_ermakov() {
    ScalingSolution free_sol = ermakov_integrate([](double) { return 0.0; }, 20.0);
    double err_free = std::abs(free_sol.b(20.0) / std::sqrt(401.0) - 1.0);

    ScalingSolution trapped = ermakov_integrate([](double) { return 1.0; }, 20.0);
    double err_trap = std::abs(trapped.b(20.0) - 1.0);

    report(9, "Ermakov integration oracles", err_free < 1e-8 && err_trap < 1e-10,
           "free expansion err " + fmt(err_free) + ", trapped err " + fmt(err_trap));
}

} // namespace

int main() {
    criterion_harmonic();
    criterion_doublet();
    criterion_taylor();
    criteria_sweeps();
    criterion_engine();
    criterion_ermakov();
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
