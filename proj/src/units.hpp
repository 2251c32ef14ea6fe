#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace dkc {

// Everything internal runs in natural units hbar = m = omega0 = kB = 1,
// so time is measured in 1/omega0, length in sqrt(hbar/(m*omega0)) and
// kick strengths kappa in units of hbar. SI enters only at the reporting
// boundary through the optional overrides below.
struct PhysicalScale {
    static constexpr double hbar = 1.0;
    static constexpr double mass = 1.0;
    static constexpr double omega0 = 1.0;
    static constexpr double boltzmann = 1.0;

    std::optional<double> si_mass;   // atom mass [kg]
    std::optional<double> si_omega0; // trap frequency [rad/s]

    bool has_si() const { return si_mass.has_value() && si_omega0.has_value(); }
};

// One Gaussian lens pulse U(x) = U*(1 - exp(-x^2/2 sigma^2)) applied in the
// instantaneous limit; only the integrated strength kappa = U*dt is physical.
// kappa > 0 is attractive (converging lens).
struct GaussianKick {
    double strength = 0.0; // kappa [hbar]
    double width = 1.0;    // sigma > 0 [natural length]
};

struct KickSequence {
    std::vector<GaussianKick> kicks;
};

// Harmonic pulse, parameterized by Omega = omega_k^2 * dt.
struct HarmonicKick {
    double strength = 0.0; // [omega0]
};

// Free expansion for expansion_time followed by one instantaneous kick.
struct ExpansionProtocol {
    double expansion_time = 0.0; // t_f [1/omega0]
    std::variant<HarmonicKick, KickSequence> kick = HarmonicKick{};
};

// Ground-state widths of the release trap. Natural units unless SI
// overrides are present, in which case meters / kg*m/s.
std::pair<double, double> initial_widths(const PhysicalScale& scale = {});

// Kinetic temperature T = m*dv^2/kB in kelvin; dv in m/s. Requires the SI
// overrides (the atom mass).
double natural_to_si_temperature(double dv_si, const PhysicalScale& scale);

// Natural-unit velocity to m/s using the SI overrides.
double velocity_to_si(double dv_natural, const PhysicalScale& scale);

} // namespace dkc
