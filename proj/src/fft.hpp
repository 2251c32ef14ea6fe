#pragma once

#include <complex>
#include <vector>

namespace dkc::fft {

// In-place unnormalized DFTs (FFTW backend, power-of-two sizes only).
// Plan creation is serialized internally; execution is thread-safe as long
// as each call works on its own buffer.
void forward(std::vector<std::complex<double>>& a);  // sum a_j e^{-2pi i jk/N}
void backward(std::vector<std::complex<double>>& a); // sum a_j e^{+2pi i jk/N}

} // namespace dkc::fft
