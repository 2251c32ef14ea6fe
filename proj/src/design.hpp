#pragma once

#include <functional>
#include <vector>

#include "units.hpp"

namespace dkc {

// Scale factor b(t) of the cloud width, with b(0) = 1 and b'(0) = 0.
// Free expansion has the closed form b(t) = sqrt(1 + t^2); arbitrary trap
// ramps come out of the Ermakov integrator as sampled trajectories.
class ScalingSolution {
public:
    static ScalingSolution free_expansion();
    static ScalingSolution sampled(std::vector<double> times,
                                   std::vector<double> b,
                                   std::vector<double> b_dot);

    double b(double t) const;
    double b_dot(double t) const;
    bool analytic() const { return analytic_; }

private:
    ScalingSolution() = default;
    bool analytic_ = true;
    std::vector<double> times_, b_, b_dot_;
};

struct DesignResult {
    std::vector<double> strengths;   // kappa_1 .. kappa_N [hbar]
    double rhs_value = 0.0;          // the m/t_f or m b'/b drive term
    double condition_estimate = 1.0; // 1-norm condition of the design system
};

// Ideal harmonic kick Omega = omega0^2 t_f / (1 + omega0^2 t_f^2).
HarmonicKick harmonic_kick_strength(double t_f, const PhysicalScale& scale = {});

// Closed-form doublet: kappa_1 = m sigma1^4 / (t_f (sigma1^2 - sigma2^2)),
// kappa_2 = -m sigma2^4 / (t_f (sigma1^2 - sigma2^2)).
DesignResult classical_doublet(double sigma1, double sigma2, double t_f);

// Solves the N x N cancellation system (rows sum_n kappa_n / sigma_n^{2i})
// with RHS (drive, 0, ..., 0). N <= 6; the system is exponentially
// ill-conditioned beyond that.
DesignResult classical_n_kick(const std::vector<double>& sigmas, double drive);

// m * b'(t_f) / b(t_f); reduces to m/t_f for large t_f.
double generalized_drive(double t_f, const ScalingSolution& scaling,
                         const PhysicalScale& scale = {});

// Fixed-step RK4 on b'' + omega(t)^2 b = omega0^2 / b^3 from b=1, b'=0.
ScalingSolution ermakov_integrate(const std::function<double(double)>& omega_of_t,
                                  double t_end, int steps = 10000);

// Classical impulse Delta p(x) = -sum_n (kappa_n / sigma_n^2) x e^{-x^2/2 sigma_n^2}.
std::vector<double> impulse_profile(const KickSequence& seq,
                                    const std::vector<double>& xs);

// Maclaurin coefficient of x^{2k+1} in the impulse profile, evaluated from
// the exact derivative pattern rather than finite differences.
double impulse_taylor_coefficient(const KickSequence& seq, int k);

KickSequence to_kick_sequence(const std::vector<double>& sigmas,
                              const std::vector<double>& strengths);

// Which drive term feeds the cancellation system: the long-time m/t_f form
// or the scaling form m b'/b (exact for the harmonic case at all times).
enum class DriveKind { focal, scaling };

DesignResult design_kicks(const std::vector<double>& sigmas, double t_f,
                          DriveKind kind = DriveKind::scaling);

} // namespace dkc
