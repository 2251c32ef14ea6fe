#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace dkc::fft {

namespace {

std::mutex g_planner_mutex;
std::unordered_map<std::size_t, fftw_plan> g_forward_plans;
std::unordered_map<std::size_t, fftw_plan> g_backward_plans;

// FFTW_UNALIGNED lets us execute a cached plan on arbitrary caller buffers.
fftw_plan plan_for(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    auto& cache = (sign == FFTW_FORWARD) ? g_forward_plans : g_backward_plans;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<std::complex<double>> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(n, p);
    return p;
}

void execute(std::vector<std::complex<double>>& a, int sign) {
    if (a.size() < 2)
        return;
    fftw_plan p = plan_for(a.size(), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(p, buf, buf);
}

} // namespace

void forward(std::vector<std::complex<double>>& a) { execute(a, FFTW_FORWARD); }
void backward(std::vector<std::complex<double>>& a) { execute(a, FFTW_BACKWARD); }

} // namespace dkc::fft
