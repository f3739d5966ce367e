#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hcross {

using Complex = std::complex<double>;

/// In-place unnormalized backward DFT (sign +1) over a row-major array with
/// the given extents: out[m] = sum_k in[k] exp(+2 pi i (k, m / M)).
void fft_backward(std::vector<Complex>& data, const std::vector<std::int64_t>& extents);

/// Smallest power of two >= x (x >= 1).
std::int64_t next_pow2(double x);

}  // namespace hcross
