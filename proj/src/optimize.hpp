#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "design.hpp"
#include "observables.hpp"
#include "units.hpp"
#include "wavestate.hpp"

namespace dkc {

struct NelderMeadOptions {
    int max_evals = 400;
    double tol_rel = 1e-6;      // simplex size relative to |x|
    double init_step_rel = 0.05;
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int evals = 0;
    bool converged = false;
};

// Deterministic derivative-free local search (no randomized restarts).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

struct OptimizationReport {
    std::vector<double> best_strengths;
    double best_dp = 0.0;
    int objective_evaluations = 0;
    bool converged = false;
    std::vector<double> initial_guess;
};

enum class SweepMode { harmonic, classical, optimized };

struct SweepPoint {
    double t_f = 0.0;
    double dx_ratio = 0.0; // Delta x at kick time / Delta x_i
    double dv_ratio = 0.0; // final Delta v / Delta v_i
    std::vector<double> strengths;
    bool ok = false;
    std::string error;
};

struct SweepCurve {
    std::vector<SweepPoint> points;
    int argmin = -1; // best ok point by dv_ratio
};

struct ProtocolOutcome {
    MomentSummary initial;
    MomentSummary at_kick;
    MomentSummary final_summary;
};

ProtocolOutcome simulate_protocol(const ExpansionProtocol& protocol,
                                  const std::optional<SpatialGrid>& grid = std::nullopt);

// Final momentum width as a function of the kick strengths, with the
// expanded pre-kick state computed once and reused across evaluations.
// The grid is sized for strengths up to twice the seed; evaluations outside
// that trust region return +infinity instead of an unvalidated number.
class KickObjective {
public:
    KickObjective(std::vector<double> sigmas, double t_f,
                  const std::vector<double>& seed_strengths);

    double operator()(const std::vector<double>& strengths) const;
    const MomentSummary& initial() const { return initial_; }
    const MomentSummary& at_kick() const { return at_kick_; }

private:
    std::vector<double> sigmas_;
    std::vector<double> caps_; // per-kick |kappa| limit from the grid sizing
    WaveState expanded_;
    MomentSummary initial_;
    MomentSummary at_kick_;
};

OptimizationReport optimize_strengths(const std::vector<double>& sigmas, double t_f,
                                      const DesignResult& seed, int budget);

SweepCurve sweep_expansion(const std::vector<double>& sigmas,
                           const std::vector<double>& t_values, SweepMode mode,
                           int budget_per_point = 0, int threads = 1);

// Golden-section refinement of the best focal time inside [t_lo, t_hi];
// tol is relative in t_f. Returns the refined sweep point.
SweepPoint refine_optimal_time(const std::vector<double>& sigmas, SweepMode mode,
                               double t_lo, double t_hi, int budget_per_point = 0,
                               double tol = 0.01);

struct SensitivityMap {
    std::vector<double> scale1; // kappa_1 / kappa_1,cl
    std::vector<double> scale2;
    std::vector<double> values; // Delta p_i / Delta p_f, row-major [s1][s2]

    double at(std::size_t i, std::size_t j) const {
        return values[i * scale2.size() + j];
    }
};

SensitivityMap sensitivity_map(double sigma1, double sigma2, double t_f,
                               const std::vector<double>& scale1,
                               const std::vector<double>& scale2, int threads = 1);

} // namespace dkc
