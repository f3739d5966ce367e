#pragma once

// Data-parallel reductions over quadrature grids.
//
// Every kernel has an OpenMP version and a `_serial` reference version that
// is kept for testing and benchmarking. The parallel versions accumulate
// fixed-size chunks into a partials array and sum it in index order, so the
// result does not depend on the number of threads.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hcross::kernels {

using Complex = std::complex<double>;

inline double abs_pow(Complex z, double p) {
  if (p == 2.0) return std::norm(z);
  if (p == 1.0) return std::abs(z);
  if (p == 4.0) {
    double n = std::norm(z);
    return n * n;
  }
  return std::pow(std::abs(z), p);
}

/// sum_m |v_m|^p
double sum_abs_pow(std::span<const Complex> v, double p);
double sum_abs_pow_serial(std::span<const Complex> v, double p);

/// Rank-one terms sampled on a tensor grid; the value at grid point m is
/// sum_t weights[t] * prod_j factors[t][j][m_j].
struct TensorSamples {
  std::vector<std::int64_t> extents;
  std::vector<Complex> weights;
  std::vector<std::vector<std::vector<Complex>>> factors;  // [term][dim][m_j]

  std::int64_t points() const;
};

/// sum over all grid points of |value|^p
double tensor_sum_abs_pow(const TensorSamples& t, double p);
double tensor_sum_abs_pow_serial(const TensorSamples& t, double p);

/// Hermitian Gram matrix G[a * n + b] = sum_m rows[a][m] * conj(rows[b][m]).
std::vector<Complex> gram(const std::vector<std::vector<Complex>>& rows);
std::vector<Complex> gram_serial(const std::vector<std::vector<Complex>>& rows);

}  // namespace hcross::kernels
