#include "hcross/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hcross/fft.hpp"
#include "hcross/grid_kernels.hpp"
#include "hcross/kernels.hpp"

namespace hcross {

void NormSpec::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("norm exponent must be in [1, inf)");
  if (!(theta >= 1.0)) throw std::invalid_argument("theta must be >= 1");
  if ((kind == NormKind::besov || kind == NormKind::h_sup) && !r)
    throw std::invalid_argument("besov/h norms need a smoothness vector r");
  if (kind == NormKind::bq1 && mode == BlockMode::delta && !(p > 1.0))
    throw std::invalid_argument("B_{q,1} in delta mode needs q > 1");
}

BlockMode parse_block_mode(const std::string& s) {
  if (s == "delta") return BlockMode::delta;
  if (s == "a_kernel" || s == "a") return BlockMode::a_kernel;
  throw std::invalid_argument("unknown block mode '" + s + "'");
}

std::string to_string(BlockMode m) { return m == BlockMode::delta ? "delta" : "a_kernel"; }

namespace {

void check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in [1, inf)");
}

void check_grid_size(std::int64_t points) {
  if (points > kMaxGridPoints)
    throw std::runtime_error("quadrature grid of " + std::to_string(points) +
                             " points exceeds the dense limit");
}

double root(double sum, std::int64_t points, double p) {
  return std::pow(sum / static_cast<double>(points), 1.0 / p);
}

}  // namespace

double lp_norm(const SparseTrigPoly& f, double p, const QuadratureGrid& grid) {
  check_p(p);
  if (f.empty()) return 0.0;
  check_grid_size(grid.total());
  auto v = synthesize(f, grid);
  return root(kernels::sum_abs_pow(v, p), grid.total(), p);
}

double lp_norm(const SparseTrigPoly& f, double p, double oversampling) {
  if (f.empty()) return 0.0;
  return lp_norm(f, p, QuadratureGrid::for_bandwidth(f.bandwidth(), oversampling));
}

double lp_norm_reference(const SparseTrigPoly& f, double p, const QuadratureGrid& grid) {
  check_p(p);
  if (f.empty()) return 0.0;
  auto v = synthesize_reference(f, grid);
  return root(kernels::sum_abs_pow_serial(v, p), grid.total(), p);
}

double lp_norm_tensor(const RankOneTerm& term, double p, double oversampling) {
  check_p(p);
  double v = std::abs(term.weight);
  for (const auto& f : term.factors) v *= factor_lp_norm(f, p, oversampling);
  return v;
}

double lp_norm(const TensorBlockPoly& t, double p, double oversampling) {
  check_p(p);
  if (t.empty()) return 0.0;
  if (p == 2.0) return t.coeff_l2();
  if (t.size() == 1) return lp_norm_tensor(t.terms().front(), p, oversampling);
  const double half = p / 2.0;
  if (half == std::floor(half) && half <= 4.0) return lp_norm_moment(t, static_cast<int>(half));
  return lp_norm_dense(t, p, oversampling);
}

namespace {

// Nondecreasing index tuples of length m over [0, n).
std::vector<std::vector<std::size_t>> multisets(std::size_t n, int m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(static_cast<std::size_t>(m), 0);
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[i];
  }
  return out;
}

double multinomial(const std::vector<std::size_t>& a) {
  double v = std::tgamma(static_cast<double>(a.size()) + 1.0);
  std::size_t run = 1;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (i < a.size() && a[i] == a[i - 1]) {
      ++run;
    } else {
      v /= std::tgamma(static_cast<double>(run) + 1.0);
      run = 1;
    }
  }
  return v;
}

}  // namespace

double lp_norm_moment(const TensorBlockPoly& t, int m, bool serial) {
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  if (t.empty()) return 0.0;
  const std::size_t d = t.dim();
  const auto& terms = t.terms();
  const auto sets = multisets(terms.size(), m);
  const std::size_t A = sets.size();
  if (A > 2048) throw std::runtime_error("moment method: too many multisets");

  std::vector<Complex> W(A);
  std::vector<double> mult(A);
  for (std::size_t a = 0; a < A; ++a) {
    Complex w = 1.0;
    for (auto i : sets[a]) w *= terms[i].weight;
    W[a] = w;
    mult[a] = multinomial(sets[a]);
  }

  const auto bw = t.bandwidth();
  double work = 0.0;
  for (Int b : bw) work += static_cast<double>(A) * static_cast<double>(A) * next_pow2(2.0 * m * b + 1.0);
  if (work > kMaxMomentWork) throw std::runtime_error("moment method: Gram work too large");

  std::vector<Complex> acc(A * A, Complex{1.0});
  for (std::size_t j = 0; j < d; ++j) {
    const std::int64_t M = next_pow2(2.0 * m * static_cast<double>(bw[j]) + 1.0);
    check_grid_size(static_cast<std::int64_t>(A) * M);
    std::vector<std::vector<Complex>> u(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) u[i] = sample_factor(terms[i].factors[j], M);
    std::vector<std::vector<Complex>> rows(A);
    for (std::size_t a = 0; a < A; ++a) {
      rows[a] = u[sets[a][0]];
      for (int q = 1; q < m; ++q)
        for (std::int64_t x = 0; x < M; ++x) rows[a][x] *= u[sets[a][q]][x];
    }
    const auto G = serial ? kernels::gram_serial(rows) : kernels::gram(rows);
    const double inv = 1.0 / static_cast<double>(M);
    for (std::size_t e = 0; e < A * A; ++e) acc[e] *= G[e] * inv;
  }

  double total = 0.0;
  for (std::size_t a = 0; a < A; ++a) {
    Complex row = 0.0;
    for (std::size_t b = 0; b < A; ++b) row += mult[b] * std::conj(W[b]) * acc[a * A + b];
    total += (mult[a] * W[a] * row).real();
  }
  return std::pow(std::max(total, 0.0), 1.0 / (2.0 * m));
}

double lp_norm_dense(const TensorBlockPoly& t, double p, double oversampling, bool serial) {
  check_p(p);
  if (t.empty()) return 0.0;
  const std::size_t d = t.dim();
  kernels::TensorSamples ts;
  for (Int b : t.bandwidth())
    ts.extents.push_back(next_pow2(oversampling * (2.0 * static_cast<double>(b) + 1.0)));
  check_grid_size(ts.points());
  for (const auto& term : t.terms()) {
    ts.weights.push_back(term.weight);
    std::vector<std::vector<Complex>> fs;
    for (std::size_t j = 0; j < d; ++j) fs.push_back(sample_factor(term.factors[j], ts.extents[j]));
    ts.factors.push_back(std::move(fs));
  }
  const double s = serial ? kernels::tensor_sum_abs_pow_serial(ts, p)
                          : kernels::tensor_sum_abs_pow(ts, p);
  return root(s, ts.points(), p);
}

std::vector<BlockIndex> a_support_blocks(const SparseTrigPoly& f) {
  if (!f.zero_mean()) throw std::invalid_argument("A_s decomposition needs a zero-mean polynomial");
  std::set<BlockIndex> out;
  const std::size_t d = f.dim();
  for (const auto& [k, c] : f.coeffs()) {
    // as_weight_1d(s, k) can be nonzero only for |s - bit_width(|k|)| <= 1
    std::vector<std::vector<int>> cand(d);
    for (std::size_t j = 0; j < d; ++j) {
      const int b = block_of_1d(k[j]);
      for (int s = std::max(1, b - 1); s <= b + 1; ++s)
        if (as_weight_1d(s, k[j]) != 0.0) cand[j].push_back(s);
    }
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<int> s(d);
      for (std::size_t j = 0; j < d; ++j) s[j] = cand[j][idx[j]];
      out.insert(BlockIndex(std::move(s)));
      std::size_t j = d;
      bool done = true;
      while (j-- > 0) {
        if (++idx[j] < cand[j].size()) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (done) break;
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// (block, ||block_s f||_p) in sorted block order
std::vector<std::pair<BlockIndex, double>> block_norms(const SparseTrigPoly& f, double p,
                                                       BlockMode mode, double os) {
  std::vector<std::pair<BlockIndex, double>> out;
  if (mode == BlockMode::delta) {
    for (const auto& s : support_blocks(f)) out.emplace_back(s, lp_norm(delta_block(f, s), p, os));
  } else {
    for (const auto& s : a_support_blocks(f))
      out.emplace_back(s, lp_norm(apply_multiplier(f, MultiplierSpec::a_block(s)), p, os));
  }
  return out;
}

double weighted_block(const BlockIndex& s, const std::vector<double>& r) {
  double e = 0.0;
  for (std::size_t j = 0; j < s.dim(); ++j) e += s[j] * r[j];
  return std::exp2(e);
}

double combine_theta(const std::vector<double>& v, double theta) {
  if (std::isinf(theta)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
  }
  double acc = 0.0;
  for (double x : v) acc += std::pow(x, theta);
  return std::pow(acc, 1.0 / theta);
}

}  // namespace

double bq1_norm(const SparseTrigPoly& f, double q, BlockMode mode, double oversampling) {
  check_p(q);
  if (mode == BlockMode::delta && !(q > 1.0))
    throw std::invalid_argument("B_{q,1} in delta mode needs q > 1");
  double acc = 0.0;
  for (const auto& [s, v] : block_norms(f, q, mode, oversampling)) acc += v;
  return acc;
}

double bq1_norm(const TensorBlockPoly& t, double q, double oversampling) {
  check_p(q);
  if (!(q > 1.0)) throw std::invalid_argument("B_{q,1} in delta mode needs q > 1");
  std::vector<const RankOneTerm*> sorted;
  for (const auto& term : t.terms()) sorted.push_back(&term);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->tag < b->tag; });
  double acc = 0.0;
  for (auto* term : sorted) acc += lp_norm_tensor(*term, q, oversampling);
  return acc;
}

double besov_norm(const SparseTrigPoly& f, const std::vector<double>& r, double p, double theta,
                  BlockMode mode, double oversampling) {
  if (r.size() != f.dim()) throw std::invalid_argument("smoothness dimension mismatch");
  if (!(theta >= 1.0)) throw std::invalid_argument("theta must be >= 1");
  std::vector<double> v;
  for (const auto& [s, nrm] : block_norms(f, p, mode, oversampling))
    v.push_back(weighted_block(s, r) * nrm);
  return combine_theta(v, theta);
}

double besov_norm(const TensorBlockPoly& t, const std::vector<double>& r, double p,
                  double theta, double oversampling) {
  if (r.size() != t.dim()) throw std::invalid_argument("smoothness dimension mismatch");
  if (!(theta >= 1.0)) throw std::invalid_argument("theta must be >= 1");
  std::vector<const RankOneTerm*> sorted;
  for (const auto& term : t.terms()) sorted.push_back(&term);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->tag < b->tag; });
  std::vector<double> v;
  for (auto* term : sorted)
    v.push_back(weighted_block(term->tag, r) * lp_norm_tensor(*term, p, oversampling));
  return combine_theta(v, theta);
}

double h_norm(const SparseTrigPoly& f, const std::vector<double>& r, double p, BlockMode mode,
              double oversampling) {
  return besov_norm(f, r, p, std::numeric_limits<double>::infinity(), mode, oversampling);
}

double evaluate_norm(const SparseTrigPoly& f, const NormSpec& spec, double oversampling) {
  spec.validate();
  switch (spec.kind) {
    case NormKind::lp:
      return lp_norm(f, spec.p, oversampling);
    case NormKind::bq1:
      return bq1_norm(f, spec.p, spec.mode, oversampling);
    case NormKind::besov:
      return besov_norm(f, *spec.r, spec.p, spec.theta, spec.mode, oversampling);
    case NormKind::h_sup:
      return h_norm(f, *spec.r, spec.p, spec.mode, oversampling);
  }
  throw std::logic_error("unhandled norm kind");
}

}  // namespace hcross
