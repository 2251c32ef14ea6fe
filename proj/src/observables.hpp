#pragma once

#include <vector>

#include "wavestate.hpp"

namespace dkc {

struct MomentSummary {
    double dx = 0.0;
    double dp = 0.0;
    double dv = 0.0;                  // dp / m
    double uncertainty_product = 0.0; // dx * dp
    double temperature_natural = 0.0; // m * dv^2 / kB
    double mean_x = 0.0;
    double mean_p = 0.0;
    double momentum_kurtosis = 0.0;   // excess; non-Gaussianity diagnostic
};

struct Distribution {
    std::vector<double> coordinate;
    std::vector<double> density;
};

struct WignerMap {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    std::vector<double> values; // row-major [x][p], units 1/action

    double at(std::size_t ix, std::size_t ip) const {
        return values[ix * p_axis.size() + ip];
    }
};

MomentSummary summarize(const WaveState& state);
Distribution momentum_distribution(const WaveState& state);
Distribution position_distribution(const WaveState& state);

// W(x,p) = (1/pi) Int dy psi*(x+y) psi(x-y) e^{2ipy}, evaluated by an
// N-point transform in y per row. `downsample` thins the x rows only; the
// p columns stay at full resolution (spacing dp/2) inside +-p_window so the
// marginals hold, since thinning p aliases the y integral.
WignerMap wigner(const WaveState& state, int downsample, double p_window);
WignerMap wigner(const WaveState& state, int downsample);

double cooling_ratio(const MomentSummary& initial, const MomentSummary& final_summary);

// Covariance <xp + px>/2 - <x><p> of a Wigner map.
double wigner_covariance(const WignerMap& map);

} // namespace dkc
