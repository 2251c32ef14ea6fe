#pragma once

#include <complex>
#include <vector>

#include "units.hpp"

namespace dkc {

// Uniform position grid x_j = (j - N/2) * spacing covering [-L, L).
// The implied momentum grid is p_k = (k - N/2) * pi/L.
struct SpatialGrid {
    int num_points = 0;
    double half_extent = 0.0;

    SpatialGrid() = default;
    SpatialGrid(int n, double l);

    double spacing() const { return 2.0 * half_extent / num_points; }
    double x(int j) const { return (j - num_points / 2) * spacing(); }
    double momentum_spacing() const { return M_PI / half_extent; }
    double p(int k) const { return (k - num_points / 2) * momentum_spacing(); }
    double momentum_extent() const { return num_points / 2 * momentum_spacing(); }

    bool operator==(const SpatialGrid&) const = default;
};

struct WaveState {
    SpatialGrid grid;
    std::vector<std::complex<double>> amp; // position representation
    double norm_tolerance = 1e-10;

    double norm() const; // sum |amp|^2 * dx
};

struct MomentumRepresentation {
    std::vector<double> p;                 // monotone
    std::vector<std::complex<double>> amp; // physicist normalization
};

struct Moments {
    double mean = 0.0;
    double rms = 0.0;     // about the mean
    double kurtosis = 0.0; // excess
};

WaveState make_ground_state(const SpatialGrid& grid, const PhysicalScale& scale = {});
WaveState propagate_free(const WaveState& state, double t);
WaveState apply_gaussian_kicks(const WaveState& state, const KickSequence& seq);
WaveState apply_harmonic_kick(const WaveState& state, const HarmonicKick& kick);
MomentumRepresentation momentum_amplitudes(const WaveState& state);

// RMS/mean/kurtosis of |psi(x)|^2 and |psi~(p)|^2 as discrete-grid sums.
Moments position_moments(const WaveState& state);
Moments momentum_moments(const WaveState& state);

// Picks a grid wide enough for free expansion to t_f and fine enough for the
// narrowest kick feature plus the accumulated phase gradients.
SpatialGrid auto_grid(const ExpansionProtocol& protocol, const PhysicalScale& scale = {});

void require_normalized(const WaveState& state);

} // namespace dkc
