#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "design.hpp"
#include "optimize.hpp"
#include "units.hpp"

namespace dkc {

const char* library_version();

// A parsed scenario config. Lengths in the config are given in units of the
// initial cloud size Delta x_i and converted to natural units here.
struct Scenario {
    PhysicalScale scale;

    double expansion_time = 0.0;
    std::string design_mode = "explicit"; // classical|generalized|optimized|explicit
    bool harmonic = false;
    std::optional<double> harmonic_strength; // overrides the ideal t/(1+t^2) strength
    std::vector<GaussianKick> explicit_kicks; // natural units
    std::vector<double> widths;               // natural units, for design modes

    std::vector<std::string> outputs; // summary, momentum_distribution, wigner

    double sweep_t_min = 1.0;
    double sweep_t_max = 40.0;
    int sweep_points = 20;
    std::string sweep_mode; // harmonic|classical|optimized; empty -> from design_mode

    double sensitivity_min = 0.9;
    double sensitivity_max = 1.1;
    int sensitivity_points = 41;

    int wigner_downsample = 0; // 0 = auto
    int optimize_budget = 0;   // 0 = default
    double extent_factor = 1.0; // pads the auto grid for finer momentum sampling

    static Scenario from_config(const Config& cfg);
};

struct RunResult {
    std::vector<std::string> files; // relative to out_dir, manifest last
};

// command: design | simulate | sweep | sensitivity | wigner.
RunResult run_scenario(const Scenario& scenario, const std::string& command,
                       const std::string& out_dir, int threads = 1);

// which: fig1 | fig2 | fig4 | fig5.
RunResult reproduce_figures(const std::string& which, const std::string& out_dir,
                            int threads = 1);

} // namespace dkc
