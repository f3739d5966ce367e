#include "hcross/grid_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcross::kernels {

namespace {

constexpr std::int64_t kChunk = 4096;

double ordered_sum(const std::vector<double>& partials) {
  double acc = 0.0;
  for (double v : partials) acc += v;
  return acc;
}

void check_tensor(const TensorSamples& t) {
  if (t.weights.size() != t.factors.size())
    throw std::invalid_argument("tensor samples: weights/factors mismatch");
  for (const auto& term : t.factors) {
    if (term.size() != t.extents.size())
      throw std::invalid_argument("tensor samples: factor count != dimension");
    for (std::size_t j = 0; j < term.size(); ++j)
      if (static_cast<std::int64_t>(term[j].size()) != t.extents[j])
        throw std::invalid_argument("tensor samples: factor length != extent");
  }
}

// Sum of |.|^p over the innermost row selected by `outer` (all coordinates
// but the last, in row-major order).
double tensor_row(const TensorSamples& t, std::int64_t outer, double p,
                  std::vector<Complex>& prefix) {
  const std::size_t d = t.extents.size();
  const std::size_t nt = t.weights.size();
  // decode outer index into coordinates 0..d-2
  std::int64_t rem = outer;
  std::vector<std::int64_t> idx(d, 0);
  for (std::size_t j = d - 1; j-- > 0;) {
    idx[j] = rem % t.extents[j];
    rem /= t.extents[j];
  }
  for (std::size_t a = 0; a < nt; ++a) {
    Complex c = t.weights[a];
    for (std::size_t j = 0; j + 1 < d; ++j) c *= t.factors[a][j][idx[j]];
    prefix[a] = c;
  }
  const std::int64_t last = t.extents[d - 1];
  double acc = 0.0;
  for (std::int64_t m = 0; m < last; ++m) {
    Complex v = 0.0;
    for (std::size_t a = 0; a < nt; ++a) v += prefix[a] * t.factors[a][d - 1][m];
    acc += abs_pow(v, p);
  }
  return acc;
}

}  // namespace

double sum_abs_pow(std::span<const Complex> v, double p) {
  const auto n = static_cast<std::int64_t>(v.size());
  const std::int64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partials(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * kChunk, hi = std::min(n, lo + kChunk);
    double acc = 0.0;
    for (std::int64_t m = lo; m < hi; ++m) acc += abs_pow(v[m], p);
    partials[c] = acc;
  }
  return ordered_sum(partials);
}

double sum_abs_pow_serial(std::span<const Complex> v, double p) {
  const auto n = static_cast<std::int64_t>(v.size());
  double total = 0.0;
  for (std::int64_t lo = 0; lo < n; lo += kChunk) {
    double acc = 0.0;
    for (std::int64_t m = lo; m < std::min(n, lo + kChunk); ++m)
      acc += abs_pow(v[m], p);
    total += acc;
  }
  return total;
}

std::int64_t TensorSamples::points() const {
  std::int64_t n = 1;
  for (auto e : extents) n *= e;
  return n;
}

double tensor_sum_abs_pow(const TensorSamples& t, double p) {
  check_tensor(t);
  if (t.extents.empty() || t.weights.empty()) return 0.0;
  const std::int64_t rows = t.points() / t.extents.back();
  std::vector<double> partials(static_cast<std::size_t>(rows), 0.0);
#pragma omp parallel
  {
    std::vector<Complex> prefix(t.weights.size());
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) partials[r] = tensor_row(t, r, p, prefix);
  }
  return ordered_sum(partials);
}

double tensor_sum_abs_pow_serial(const TensorSamples& t, double p) {
  check_tensor(t);
  if (t.extents.empty() || t.weights.empty()) return 0.0;
  const std::size_t d = t.extents.size();
  const std::int64_t total = t.points();
  std::vector<std::int64_t> idx(d, 0);
  double acc_total = 0.0, acc_row = 0.0;
  for (std::int64_t m = 0; m < total; ++m) {
    Complex v = 0.0;
    for (std::size_t a = 0; a < t.weights.size(); ++a) {
      Complex c = t.weights[a];
      for (std::size_t j = 0; j < d; ++j) c *= t.factors[a][j][idx[j]];
      v += c;
    }
    acc_row += abs_pow(v, p);
    for (std::size_t j = d; j-- > 0;) {
      if (++idx[j] < t.extents[j]) break;
      idx[j] = 0;
      if (j == d - 1) {
        acc_total += acc_row;
        acc_row = 0.0;
      }
    }
  }
  return acc_total + acc_row;
}

std::vector<Complex> gram(const std::vector<std::vector<Complex>>& rows) {
  const auto n = static_cast<std::int64_t>(rows.size());
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw std::invalid_argument("gram: ragged rows");
  std::vector<Complex> g(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = a; b < n; ++b) {
      const auto& x = rows[a];
      const auto& y = rows[b];
      Complex acc = 0.0;
      for (std::size_t m = 0; m < x.size(); ++m) acc += x[m] * std::conj(y[m]);
      g[a * n + b] = acc;
      g[b * n + a] = std::conj(acc);
    }
  }
  return g;
}

std::vector<Complex> gram_serial(const std::vector<std::vector<Complex>>& rows) {
  const auto n = rows.size();
  std::vector<Complex> g(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Complex acc = 0.0;
      for (std::size_t m = 0; m < rows[a].size(); ++m)
        acc += rows[a][m] * std::conj(rows[b][m]);
      g[a * n + b] = acc;
    }
  return g;
}

}  // namespace hcross::kernels
