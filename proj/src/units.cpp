#include "units.hpp"

#include <cmath>

#include "errors.hpp"

namespace dkc {

namespace {
constexpr double k_si_hbar = 1.054571817e-34;      // J*s
constexpr double k_si_boltzmann = 1.380649e-23;    // J/K
} // namespace

std::pair<double, double> initial_widths(const PhysicalScale& scale) {
    if (scale.has_si()) {
        double m = *scale.si_mass;
        double w0 = *scale.si_omega0;
        if (m <= 0.0 || w0 <= 0.0)
            fail_config("SI overrides must be strictly positive");
        double dx = std::sqrt(k_si_hbar / (2.0 * m * w0));
        double dp = std::sqrt(k_si_hbar * m * w0 / 2.0);
        return {dx, dp};
    }
    double w = 1.0 / std::sqrt(2.0);
    return {w, w};
}

double natural_to_si_temperature(double dv_si, const PhysicalScale& scale) {
    if (!scale.si_mass)
        fail_config("natural_to_si_temperature requires the SI atom mass");
    if (dv_si < 0.0)
        fail_config("velocity width must be non-negative");
    return *scale.si_mass * dv_si * dv_si / k_si_boltzmann;
}

double velocity_to_si(double dv_natural, const PhysicalScale& scale) {
    if (!scale.has_si())
        fail_config("velocity_to_si requires SI overrides");
    // natural velocity unit is sqrt(hbar*omega0/m)
    return dv_natural * std::sqrt(k_si_hbar * (*scale.si_omega0) / (*scale.si_mass));
}

} // namespace dkc
