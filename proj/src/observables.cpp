#include "observables.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "fft.hpp"

namespace dkc {

MomentSummary summarize(const WaveState& state) {
    require_normalized(state);
    Moments mx = position_moments(state);
    Moments mp = momentum_moments(state);
    MomentSummary s;
    s.dx = mx.rms;
    s.dp = mp.rms;
    s.dv = mp.rms; // m = 1
    s.uncertainty_product = s.dx * s.dp;
    s.temperature_natural = s.dv * s.dv;
    s.mean_x = mx.mean;
    s.mean_p = mp.mean;
    s.momentum_kurtosis = mp.kurtosis;
    return s;
}

Distribution position_distribution(const WaveState& state) {
    require_normalized(state);
    Distribution d;
    int n = state.grid.num_points;
    d.coordinate.resize(n);
    d.density.resize(n);
    for (int j = 0; j < n; ++j) {
        d.coordinate[j] = state.grid.x(j);
        d.density[j] = std::norm(state.amp[j]);
    }
    return d;
}

Distribution momentum_distribution(const WaveState& state) {
    require_normalized(state);
    MomentumRepresentation rep = momentum_amplitudes(state);
    Distribution d;
    d.coordinate = rep.p;
    d.density.resize(rep.amp.size());
    for (std::size_t k = 0; k < rep.amp.size(); ++k)
        d.density[k] = std::norm(rep.amp[k]);
    return d;
}

WignerMap wigner(const WaveState& state, int downsample, double p_window) {
    require_normalized(state);
    int n = state.grid.num_points;
    if (downsample < 1 || n % downsample != 0)
        fail_config("wigner downsample must divide the grid size");
    double dx = state.grid.spacing();
    double dq = 0.5 * state.grid.momentum_spacing();
    double row_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0; // e^{i pi N/2}

    WignerMap map;
    for (int i = 0; i < n; i += downsample)
        map.x_axis.push_back(state.grid.x(i));
    int k_lo = n / 2, k_hi = n / 2;
    for (int k = 0; k < n; ++k) {
        if (std::abs((k - n / 2) * dq) <= p_window) {
            k_lo = std::min(k_lo, k);
            k_hi = std::max(k_hi, k);
        }
    }
    for (int k = k_lo; k <= k_hi; ++k)
        map.p_axis.push_back((k - n / 2) * dq);
    map.values.resize(map.x_axis.size() * map.p_axis.size());

    std::vector<std::complex<double>> work(n);
    std::size_t row = 0;
    for (int i = 0; i < n; i += downsample, ++row) {
        for (int j = 0; j < n; ++j) {
            int off = j - n / 2;
            int jp = i + off;
            int jm = i - off;
            std::complex<double> g = 0.0;
            if (jp >= 0 && jp < n && jm >= 0 && jm < n)
                g = std::conj(state.amp[jp]) * state.amp[jm];
            work[j] = (off % 2 == 0) ? g : -g;
        }
        fft::backward(work);
        for (int k = k_lo; k <= k_hi; ++k) {
            double col_sign = (k % 2 == 0) ? 1.0 : -1.0;
            map.values[row * map.p_axis.size() + (k - k_lo)] =
                dx / M_PI * row_sign * col_sign * work[k].real();
        }
    }
    return map;
}

WignerMap wigner(const WaveState& state, int downsample) {
    return wigner(state, downsample, 6.0 / std::sqrt(2.0));
}

double cooling_ratio(const MomentSummary& initial, const MomentSummary& final_summary) {
    if (!(initial.dv > 0.0))
        fail_physics("cooling ratio undefined for zero initial velocity width");
    double r = final_summary.dv / initial.dv;
    return r * r;
}

double wigner_covariance(const WignerMap& map) {
    double dxs = map.x_axis[1] - map.x_axis[0];
    double dps = map.p_axis[1] - map.p_axis[0];
    double w0 = 0.0, mx = 0.0, mp = 0.0, mxp = 0.0;
    for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
        for (std::size_t k = 0; k < map.p_axis.size(); ++k) {
            double w = map.at(i, k) * dxs * dps;
            w0 += w;
            mx += w * map.x_axis[i];
            mp += w * map.p_axis[k];
            mxp += w * map.x_axis[i] * map.p_axis[k];
        }
    }
    mx /= w0;
    mp /= w0;
    return mxp / w0 - mx * mp;
}

} // namespace dkc
