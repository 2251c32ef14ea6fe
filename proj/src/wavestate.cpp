#include "wavestate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "fft.hpp"

namespace dkc {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Density tail |psi(L)|^2 / |psi(0)|^2 for a Gaussian of RMS width w.
double gaussian_tail(double half_extent, double w) {
    return std::exp(-half_extent * half_extent / (2.0 * w * w));
}

constexpr double k_tail_limit = 1e-12;

void check_kicks(const KickSequence& seq) {
    if (seq.kicks.empty())
        fail_config("kick sequence must be nonempty");
    for (const auto& k : seq.kicks)
        if (!(k.width > 0.0))
            fail_config("kick width must be positive");
}

Moments moments_from_density(const std::vector<double>& coord,
                             const std::vector<double>& weight) {
    double w0 = 0.0, w1 = 0.0;
    for (std::size_t i = 0; i < coord.size(); ++i) {
        w0 += weight[i];
        w1 += weight[i] * coord[i];
    }
    double mean = w1 / w0;
    double m2 = 0.0, m4 = 0.0;
    for (std::size_t i = 0; i < coord.size(); ++i) {
        double d = coord[i] - mean;
        m2 += weight[i] * d * d;
        m4 += weight[i] * d * d * d * d;
    }
    m2 /= w0;
    m4 /= w0;
    Moments m;
    m.mean = mean;
    m.rms = std::sqrt(m2);
    m.kurtosis = (m2 > 0.0) ? m4 / (m2 * m2) - 3.0 : 0.0;
    return m;
}

} // namespace

SpatialGrid::SpatialGrid(int n, double l) : num_points(n), half_extent(l) {
    if (!is_power_of_two(n) || n < 2)
        fail_config("grid size must be a power of two >= 2, got " + std::to_string(n));
    if (!(l > 0.0))
        fail_config("grid half-extent must be positive");
}

double WaveState::norm() const {
    double s = 0.0;
    for (const auto& a : amp)
        s += std::norm(a);
    return s * grid.spacing();
}

void require_normalized(const WaveState& state) {
    if (std::abs(state.norm() - 1.0) > state.norm_tolerance)
        fail_physics("wavefunction norm drifted beyond tolerance");
}

WaveState make_ground_state(const SpatialGrid& grid, const PhysicalScale&) {
    // psi(x) = pi^{-1/4} exp(-x^2/2) in natural units; RMS width 1/sqrt(2).
    double dx_i = 1.0 / std::sqrt(2.0);
    if (gaussian_tail(grid.half_extent, dx_i) >= k_tail_limit)
        fail_physics("grid too narrow for the trap ground state");
    WaveState s;
    s.grid = grid;
    s.amp.resize(grid.num_points);
    double norm_const = std::pow(M_PI, -0.25);
    for (int j = 0; j < grid.num_points; ++j) {
        double x = grid.x(j);
        s.amp[j] = norm_const * std::exp(-0.5 * x * x);
    }
    double n = s.norm();
    double scale = 1.0 / std::sqrt(n);
    for (auto& a : s.amp)
        a *= scale;
    return s;
}

WaveState propagate_free(const WaveState& state, double t) {
    if (t < 0.0)
        fail_physics("free propagation time must be non-negative");
    if (t == 0.0)
        return state;

    Moments mx = position_moments(state);
    Moments mp = momentum_moments(state);
    // Delta(x + p t) <= Delta x + Delta p * t bounds the expanded width.
    double predicted = mx.rms + mp.rms * t;
    if (predicted > state.grid.half_extent / 6.0)
        fail_physics("grid overflow: expanded width " + std::to_string(predicted) +
                     " exceeds half-extent/6 = " +
                     std::to_string(state.grid.half_extent / 6.0));

    WaveState out = state;
    fft::forward(out.amp);
    int n = state.grid.num_points;
    double dp = state.grid.momentum_spacing();
    for (int k = 0; k < n; ++k) {
        double p = (k < n / 2) ? k * dp : (k - n) * dp;
        out.amp[k] *= std::polar(1.0, -0.5 * p * p * t);
    }
    fft::backward(out.amp);
    double inv = 1.0 / n;
    for (auto& a : out.amp)
        a *= inv;
    return out;
}

WaveState apply_gaussian_kicks(const WaveState& state, const KickSequence& seq) {
    check_kicks(seq);
    require_normalized(state);
    WaveState out = state;
    int n = state.grid.num_points;
    for (int j = 0; j < n; ++j) {
        double x = state.grid.x(j);
        double phase = 0.0;
        for (const auto& k : seq.kicks) {
            double s2 = k.width * k.width;
            phase += k.strength * (1.0 - std::exp(-0.5 * x * x / s2));
        }
        out.amp[j] *= std::polar(1.0, -phase);
    }
    return out;
}

WaveState apply_harmonic_kick(const WaveState& state, const HarmonicKick& kick) {
    require_normalized(state);
    WaveState out = state;
    int n = state.grid.num_points;
    for (int j = 0; j < n; ++j) {
        double x = state.grid.x(j);
        out.amp[j] *= std::polar(1.0, -0.5 * kick.strength * x * x);
    }
    return out;
}

MomentumRepresentation momentum_amplitudes(const WaveState& state) {
    int n = state.grid.num_points;
    double dx = state.grid.spacing();
    std::vector<std::complex<double>> work(state.amp);
    for (int j = 1; j < n; j += 2)
        work[j] = -work[j];
    fft::forward(work);

    MomentumRepresentation rep;
    rep.p.resize(n);
    rep.amp.resize(n);
    double front = dx / std::sqrt(2.0 * M_PI);
    double parity = (n / 2) % 2 == 0 ? 1.0 : -1.0; // e^{-i pi N/2}
    for (int k = 0; k < n; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        rep.p[k] = state.grid.p(k);
        rep.amp[k] = front * parity * sign * work[k];
    }
    return rep;
}

Moments position_moments(const WaveState& state) {
    int n = state.grid.num_points;
    double dx = state.grid.spacing();
    std::vector<double> coord(n), weight(n);
    for (int j = 0; j < n; ++j) {
        coord[j] = state.grid.x(j);
        weight[j] = std::norm(state.amp[j]) * dx;
    }
    return moments_from_density(coord, weight);
}

Moments momentum_moments(const WaveState& state) {
    int n = state.grid.num_points;
    double dx = state.grid.spacing();
    double dp = state.grid.momentum_spacing();
    std::vector<std::complex<double>> work(state.amp);
    fft::forward(work);
    double front = dx * dx / (2.0 * M_PI) * dp;
    std::vector<double> coord(n), weight(n);
    for (int k = 0; k < n; ++k) {
        coord[k] = (k < n / 2) ? k * dp : (k - n) * dp;
        weight[k] = std::norm(work[k]) * front;
    }
    return moments_from_density(coord, weight);
}

SpatialGrid auto_grid(const ExpansionProtocol& protocol, const PhysicalScale&) {
    double t = protocol.expansion_time;
    if (t < 0.0)
        fail_config("expansion time must be non-negative");
    double dx_i = 1.0 / std::sqrt(2.0);
    double dp_i = dx_i;
    double b = std::sqrt(1.0 + t * t);

    double half_extent = 9.0 * dx_i * b;

    // Narrowest position feature to resolve and the largest local momentum
    // the sampled phase can carry (expansion chirp + kick phase gradient).
    double feature = dx_i;
    double kick_slope = 0.0;
    if (const auto* seq = std::get_if<KickSequence>(&protocol.kick)) {
        check_kicks(*seq);
        for (const auto& k : seq->kicks) {
            feature = std::min(feature, k.width / 4.0);
            kick_slope += std::abs(k.strength) * std::exp(-0.5) / k.width;
        }
    } else {
        const auto& h = std::get<HarmonicKick>(protocol.kick);
        kick_slope = std::abs(h.strength) * 6.0 * dx_i * b;
    }
    double chirp = 6.0 * dx_i * b * t / (1.0 + t * t);
    double p_need = 8.0 * dp_i + chirp + kick_slope;

    double dx = std::min({feature / 4.0, M_PI / p_need});
    double n_real = 2.0 * half_extent / dx;
    int n = 256;
    while (n < n_real) {
        n *= 2;
        if (n > (1 << 22))
            fail_resource("auto_grid would need more than 2^22 points");
    }
    return SpatialGrid(n, half_extent);
}

} // namespace dkc
