#include "hcross/tensor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hcross/fft.hpp"
#include "hcross/grid_kernels.hpp"

namespace hcross {

Complex Factor1D::at(Int k) const {
  if (k < lo || k > hi()) return 0.0;
  return c[static_cast<std::size_t>(k - lo)];
}

Int Factor1D::max_abs_freq() const {
  Int m = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != Complex{}) m = std::max(m, std::abs(lo + static_cast<Int>(i)));
  return m;
}

double Factor1D::coeff_l2() const {
  double acc = 0.0;
  for (auto v : c) acc += std::norm(v);
  return std::sqrt(acc);
}

Factor1D Factor1D::block(int s, const std::function<Complex(Int)>& coeff) {
  if (s < 1) throw std::invalid_argument("block index must be >= 1");
  const Int top = (Int{1} << s) - 1, bottom = Int{1} << (s - 1);
  Factor1D f;
  f.lo = -top;
  f.c.assign(static_cast<std::size_t>(2 * top + 1), Complex{});
  for (Int k = bottom; k <= top; ++k) {
    f.c[static_cast<std::size_t>(k + top)] = coeff(k);
    f.c[static_cast<std::size_t>(-k + top)] = coeff(-k);
  }
  return f;
}

TensorBlockPoly::TensorBlockPoly(std::size_t d) : d_(d) {
  if (d == 0) throw std::invalid_argument("dimension must be >= 1");
}

void TensorBlockPoly::add_term(RankOneTerm t) {
  if (t.tag.dim() != d_ || t.factors.size() != d_)
    throw std::invalid_argument("rank-one term dimension mismatch");
  for (std::size_t j = 0; j < d_; ++j) {
    const auto& f = t.factors[j];
    const Int lo = Int{1} << (t.tag[j] - 1), hi = (Int{1} << t.tag[j]) - 1;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
      if (f.c[i] == Complex{}) continue;
      const Int k = std::abs(f.lo + static_cast<Int>(i));
      if (k < lo || k > hi)
        throw std::invalid_argument("factor support leaves block " + to_string(t.tag));
    }
  }
  for (const auto& u : terms_)
    if (u.tag == t.tag) throw std::invalid_argument("duplicate block tag " + to_string(t.tag));
  terms_.push_back(std::move(t));
}

TensorBlockPoly& TensorBlockPoly::operator*=(Complex a) {
  for (auto& t : terms_) t.weight *= a;
  return *this;
}

std::vector<Int> TensorBlockPoly::bandwidth() const {
  std::vector<Int> bw(d_, 0);
  for (const auto& t : terms_)
    for (std::size_t j = 0; j < d_; ++j)
      bw[j] = std::max(bw[j], t.factors[j].max_abs_freq());
  return bw;
}

double TensorBlockPoly::coeff_l2() const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = std::norm(t.weight);
    for (const auto& f : t.factors) v *= f.coeff_l2() * f.coeff_l2();
    acc += v;
  }
  return std::sqrt(acc);
}

SparseTrigPoly to_sparse(const TensorBlockPoly& t) {
  const std::size_t d = t.dim();
  SparseTrigPoly out(d);
  for (const auto& term : t.terms()) {
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      Complex c = term.weight;
      std::vector<Int> k(d);
      for (std::size_t j = 0; j < d; ++j) {
        c *= term.factors[j].c[idx[j]];
        k[j] = term.factors[j].lo + static_cast<Int>(idx[j]);
      }
      if (c != Complex{}) out.add(FreqIndex(std::move(k)), c);
      std::size_t j = d;
      bool done = true;
      while (j-- > 0) {
        if (++idx[j] < term.factors[j].c.size()) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

std::vector<Complex> sample_factor(const Factor1D& f, std::int64_t M) {
  if (M < 2 * f.max_abs_freq() + 1)
    throw std::invalid_argument("1-D grid too small for factor");
  std::vector<Complex> v(static_cast<std::size_t>(M));
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    const Int k = f.lo + static_cast<Int>(i);
    v[static_cast<std::size_t>(((k % M) + M) % M)] += f.c[i];
  }
  fft_backward(v, {M});
  return v;
}

double factor_lp_norm(const Factor1D& f, double p, double oversampling) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (p == 2.0) return f.coeff_l2();
  const std::int64_t M =
      next_pow2(oversampling * (2.0 * static_cast<double>(f.max_abs_freq()) + 1.0));
  auto u = sample_factor(f, M);
  return std::pow(kernels::sum_abs_pow(u, p) / static_cast<double>(M), 1.0 / p);
}

TensorBlockPoly weyl_derivative(const TensorBlockPoly& t, const std::vector<double>& r,
                                const std::vector<double>& alpha) {
  if (r.size() != t.dim() || alpha.size() != t.dim())
    throw std::invalid_argument("smoothness/alpha dimension mismatch");
  TensorBlockPoly out(t.dim());
  for (auto term : t.terms()) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      auto& f = term.factors[j];
      for (std::size_t i = 0; i < f.c.size(); ++i) {
        const Int k = f.lo + static_cast<Int>(i);
        if (f.c[i] == Complex{}) continue;
        const double mag = std::pow(static_cast<double>(std::abs(k)), r[j]);
        const double ph = (k > 0 ? 1.0 : -1.0) * alpha[j] * std::numbers::pi / 2.0;
        f.c[i] *= std::polar(mag, ph);
      }
    }
    out.add_term(std::move(term));
  }
  return out;
}

TensorBlockPoly delta_block(const TensorBlockPoly& t, const BlockIndex& s) {
  TensorBlockPoly out(t.dim());
  for (const auto& term : t.terms())
    if (term.tag == s) out.add_term(term);
  return out;
}

TensorBlockPoly restrict_to_cross(const TensorBlockPoly& t, const CrossSpec& spec) {
  if (spec.dim() != t.dim()) throw std::invalid_argument("cross dimension mismatch");
  TensorBlockPoly out(t.dim());
  for (const auto& term : t.terms())
    if (spec.contains(term.tag)) out.add_term(term);
  return out;
}

TensorBlockPoly cross_complement(const TensorBlockPoly& t, const CrossSpec& spec) {
  if (spec.dim() != t.dim()) throw std::invalid_argument("cross dimension mismatch");
  TensorBlockPoly out(t.dim());
  for (const auto& term : t.terms())
    if (!spec.contains(term.tag)) out.add_term(term);
  return out;
}

}  // namespace hcross
