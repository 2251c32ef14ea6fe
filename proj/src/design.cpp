#include "design.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace dkc {

namespace {

constexpr double k_degeneracy_rel = 1e-6;
constexpr double k_condition_limit = 1e12;
constexpr int k_max_kicks = 6;

void check_widths(const std::vector<double>& sigmas) {
    if (sigmas.empty() || sigmas.size() > k_max_kicks)
        fail_config("kick count must be between 1 and " + std::to_string(k_max_kicks));
    double s2max = 0.0;
    for (double s : sigmas) {
        if (!(s > 0.0))
            fail_config("kick widths must be positive");
        s2max = std::max(s2max, s * s);
    }
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        for (std::size_t j = i + 1; j < sigmas.size(); ++j)
            if (std::abs(sigmas[i] * sigmas[i] - sigmas[j] * sigmas[j]) <
                k_degeneracy_rel * s2max)
                fail_physics("degenerate-lens: widths " + std::to_string(sigmas[i]) +
                             " and " + std::to_string(sigmas[j]) +
                             " are too close to form a compound lens");
}

double norm1(const std::vector<std::vector<double>>& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i)
            col += std::abs(m[i][j]);
        best = std::max(best, col);
    }
    return best;
}

// Partial-pivoted elimination; returns x and fills inv with A^{-1}.
std::vector<double> solve_with_inverse(std::vector<std::vector<double>> a,
                                       std::vector<double> rhs,
                                       std::vector<std::vector<double>>& inv) {
    std::size_t n = a.size();
    inv.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col]))
                piv = r;
        if (a[piv][col] == 0.0)
            fail_physics("degenerate-lens: singular design system");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        std::swap(rhs[col], rhs[piv]);
        double d = a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        rhs[col] /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0.0)
                continue;
            double f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace

ScalingSolution ScalingSolution::free_expansion() {
    ScalingSolution s;
    s.analytic_ = true;
    return s;
}

ScalingSolution ScalingSolution::sampled(std::vector<double> times,
                                         std::vector<double> b,
                                         std::vector<double> b_dot) {
    ScalingSolution s;
    s.analytic_ = false;
    s.times_ = std::move(times);
    s.b_ = std::move(b);
    s.b_dot_ = std::move(b_dot);
    return s;
}

namespace {
double interp(const std::vector<double>& ts, const std::vector<double>& ys, double t) {
    if (t < ts.front() - 1e-12 || t > ts.back() + 1e-9)
        fail_config("scaling solution queried outside the integrated span");
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it == ts.begin())
        return ys.front();
    if (it == ts.end())
        return ys.back();
    std::size_t i = static_cast<std::size_t>(it - ts.begin());
    double f = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return ys[i - 1] + f * (ys[i] - ys[i - 1]);
}
} // namespace

double ScalingSolution::b(double t) const {
    if (analytic_)
        return std::sqrt(1.0 + t * t);
    return interp(times_, b_, t);
}

double ScalingSolution::b_dot(double t) const {
    if (analytic_)
        return t / std::sqrt(1.0 + t * t);
    return interp(times_, b_dot_, t);
}

HarmonicKick harmonic_kick_strength(double t_f, const PhysicalScale&) {
    if (t_f < 0.0)
        fail_config("focal time must be non-negative");
    return HarmonicKick{t_f / (1.0 + t_f * t_f)};
}

DesignResult classical_doublet(double sigma1, double sigma2, double t_f) {
    if (!(t_f > 0.0))
        fail_config("focal time must be positive for the doublet design");
    check_widths({sigma1, sigma2});
    double gap = sigma1 * sigma1 - sigma2 * sigma2;
    DesignResult r;
    r.rhs_value = 1.0 / t_f;
    r.strengths = {std::pow(sigma1, 4) / (t_f * gap),
                   -std::pow(sigma2, 4) / (t_f * gap)};
    r.condition_estimate = 1.0;
    return r;
}

DesignResult classical_n_kick(const std::vector<double>& sigmas, double drive) {
    if (!(drive > 0.0))
        fail_config("design drive must be positive");
    check_widths(sigmas);
    std::size_t n = sigmas.size();

    // Vandermonde-like in u_j = 1/sigma_j^2: row i has entries u_j^{i+1}.
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double u = 1.0 / (sigmas[j] * sigmas[j]);
        double pw = u;
        for (std::size_t i = 0; i < n; ++i) {
            a[i][j] = pw;
            pw *= u;
        }
    }
    std::vector<double> rhs(n, 0.0);
    rhs[0] = drive;

    std::vector<std::vector<double>> inv;
    std::vector<double> kappa = solve_with_inverse(a, rhs, inv);

    DesignResult r;
    r.strengths = kappa;
    r.rhs_value = drive;
    r.condition_estimate = norm1(a) * norm1(inv);
    if (r.condition_estimate > k_condition_limit)
        fail_physics("degenerate-lens: design system condition " +
                     std::to_string(r.condition_estimate) + " exceeds 1e12");

    // Residual check on the original system.
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += a[i][j] * kappa[j];
        if (std::abs(s - rhs[i]) > 1e-9 * drive)
            fail_physics("design system residual too large");
    }
    return r;
}

double generalized_drive(double t_f, const ScalingSolution& scaling,
                         const PhysicalScale&) {
    if (t_f < 0.0)
        fail_config("focal time must be non-negative");
    return scaling.b_dot(t_f) / scaling.b(t_f);
}

ScalingSolution ermakov_integrate(const std::function<double(double)>& omega_of_t,
                                  double t_end, int steps) {
    if (!(t_end > 0.0))
        fail_config("integration span must be positive");
    if (steps < 100)
        fail_config("ermakov integration needs at least 100 steps");

    double h = t_end / steps;
    std::vector<double> ts(steps + 1), bs(steps + 1), bds(steps + 1);
    double b = 1.0, bd = 0.0;
    ts[0] = 0.0;
    bs[0] = b;
    bds[0] = bd;
    auto accel = [&](double t, double bb) {
        double w = omega_of_t(t);
        return 1.0 / (bb * bb * bb) - w * w * bb;
    };
    for (int i = 0; i < steps; ++i) {
        double t = i * h;
        double k1b = bd, k1d = accel(t, b);
        double k2b = bd + 0.5 * h * k1d, k2d = accel(t + 0.5 * h, b + 0.5 * h * k1b);
        double k3b = bd + 0.5 * h * k2d, k3d = accel(t + 0.5 * h, b + 0.5 * h * k2b);
        double k4b = bd + h * k3d, k4d = accel(t + h, b + h * k3b);
        b += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
        bd += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        if (!(b > 1e-6))
            fail_physics("scale factor collapsed during Ermakov integration");
        ts[i + 1] = (i + 1) * h;
        bs[i + 1] = b;
        bds[i + 1] = bd;
    }
    return ScalingSolution::sampled(std::move(ts), std::move(bs), std::move(bds));
}

std::vector<double> impulse_profile(const KickSequence& seq,
                                    const std::vector<double>& xs) {
    std::vector<double> out(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double x = xs[i];
        double dp = 0.0;
        for (const auto& k : seq.kicks) {
            double s2 = k.width * k.width;
            dp -= k.strength / s2 * x * std::exp(-0.5 * x * x / s2);
        }
        out[i] = dp;
    }
    return out;
}

double impulse_taylor_coefficient(const KickSequence& seq, int k) {
    if (k < 0)
        fail_config("taylor order must be non-negative");
    // x e^{-x^2/2s^2} = sum_k (-1)^k x^{2k+1} / (2^k k! s^{2k})
    double fact = 1.0;
    for (int i = 2; i <= k; ++i)
        fact *= i;
    double sign = (k % 2 == 0) ? -1.0 : 1.0; // overall minus from the impulse
    double c = 0.0;
    for (const auto& kick : seq.kicks)
        c += sign * kick.strength /
             (std::pow(2.0, k) * fact * std::pow(kick.width, 2 * k + 2));
    return c;
}

DesignResult design_kicks(const std::vector<double>& sigmas, double t_f,
                          DriveKind kind) {
    if (!(t_f > 0.0))
        fail_config("focal time must be positive for kick design");
    double drive = (kind == DriveKind::focal)
                       ? 1.0 / t_f
                       : generalized_drive(t_f, ScalingSolution::free_expansion());
    return classical_n_kick(sigmas, drive);
}

KickSequence to_kick_sequence(const std::vector<double>& sigmas,
                              const std::vector<double>& strengths) {
    if (sigmas.size() != strengths.size())
        fail_config("width and strength lists must have equal length");
    KickSequence seq;
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        seq.kicks.push_back({strengths[i], sigmas[i]});
    return seq;
}

} // namespace dkc
