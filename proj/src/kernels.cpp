#include "hcross/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hcross/norms.hpp"

namespace hcross {

double vp_weight(Int l, Int k) {
  if (l < 1) throw std::invalid_argument("vp_weight: l must be >= 1");
  const Int a = std::abs(k);
  if (a <= l) return 1.0;
  if (a >= 2 * l) return 0.0;
  return 1.0 - static_cast<double>(a - l) / static_cast<double>(l);
}

double as_weight_1d(int s, Int k) {
  if (s < 1) throw std::invalid_argument("as_weight: s must be >= 1");
  const double hi = vp_weight(Int{1} << s, k);
  const double lo = s == 1 ? (k == 0 ? 1.0 : 0.0) : vp_weight(Int{1} << (s - 1), k);
  return hi - lo;
}

double as_weight(const BlockIndex& s, const FreqIndex& k) {
  if (s.dim() != k.dim()) throw std::invalid_argument("as_weight: dimension mismatch");
  double w = 1.0;
  for (std::size_t j = 0; j < k.dim(); ++j) {
    if (k[j] == 0) throw std::invalid_argument("as_weight: frequency has a zero coordinate");
    w *= as_weight_1d(s[j], k[j]);
  }
  return w;
}

Complex bernoulli_weight_1d(Int k, double r, double alpha) {
  if (k == 0) return 0.0;
  const double mag = std::pow(static_cast<double>(std::abs(k)), -r);
  return std::polar(mag, -(k > 0 ? 1.0 : -1.0) * alpha * std::numbers::pi / 2.0);
}

MultiplierSpec MultiplierSpec::valle_poussin(std::vector<Int> l) {
  for (Int v : l)
    if (v < 1) throw std::invalid_argument("Vallee Poussin level must be >= 1");
  MultiplierSpec m;
  m.kind = MultiplierKind::valle_poussin;
  m.l = std::move(l);
  return m;
}

MultiplierSpec MultiplierSpec::a_block(BlockIndex s) {
  MultiplierSpec m;
  m.kind = MultiplierKind::a_block;
  m.s = std::move(s);
  return m;
}

MultiplierSpec MultiplierSpec::bernoulli(std::vector<double> r, std::vector<double> alpha) {
  if (r.size() != alpha.size()) throw std::invalid_argument("r/alpha length mismatch");
  for (double v : r)
    if (!(v > 0.0)) throw std::invalid_argument("Bernoulli smoothness must be positive");
  MultiplierSpec m;
  m.kind = MultiplierKind::bernoulli;
  m.r = std::move(r);
  m.alpha = std::move(alpha);
  return m;
}

std::size_t MultiplierSpec::dim() const {
  switch (kind) {
    case MultiplierKind::valle_poussin:
      return l.size();
    case MultiplierKind::a_block:
      return s.dim();
    case MultiplierKind::bernoulli:
      return r.size();
  }
  return 0;
}

Complex MultiplierSpec::weight(const FreqIndex& k) const {
  if (k.dim() != dim()) throw std::invalid_argument("multiplier dimension mismatch");
  Complex w = 1.0;
  for (std::size_t j = 0; j < k.dim(); ++j) {
    switch (kind) {
      case MultiplierKind::valle_poussin:
        w *= vp_weight(l[j], k[j]);
        break;
      case MultiplierKind::a_block:
        w *= as_weight_1d(s[j], k[j]);
        break;
      case MultiplierKind::bernoulli:
        w *= bernoulli_weight_1d(k[j], r[j], alpha[j]);
        break;
    }
  }
  return w;
}

SparseTrigPoly apply_multiplier(const SparseTrigPoly& f, const MultiplierSpec& m) {
  if (m.dim() != f.dim()) throw std::invalid_argument("multiplier dimension mismatch");
  SparseTrigPoly out(f.dim());
  for (const auto& [k, c] : f.coeffs()) out.set(k, c * m.weight(k));
  return out;
}

SparseTrigPoly bernoulli_coeffs(const std::vector<double>& r, const std::vector<double>& alpha,
                                const std::vector<BlockIndex>& region) {
  return to_sparse(bernoulli_tensor(r, alpha, region));
}

TensorBlockPoly bernoulli_tensor(const std::vector<double>& r, const std::vector<double>& alpha,
                                 const std::vector<BlockIndex>& region) {
  if (r.size() != alpha.size() || r.empty())
    throw std::invalid_argument("r/alpha length mismatch");
  for (double v : r)
    if (!(v > 0.0)) throw std::invalid_argument("Bernoulli smoothness must be positive");
  TensorBlockPoly out(r.size());
  for (const auto& s : region) {
    if (s.dim() != r.size()) throw std::invalid_argument("region dimension mismatch");
    RankOneTerm t{s, 1.0, {}};
    for (std::size_t j = 0; j < r.size(); ++j)
      t.factors.push_back(Factor1D::block(
          s[j], [&](Int k) { return bernoulli_weight_1d(k, r[j], alpha[j]); }));
    out.add_term(std::move(t));
  }
  return out;
}

TensorBlockPoly dn_poly(int n, std::size_t d) {
  TensorBlockPoly out(d);
  if (n < static_cast<int>(d)) return out;
  const std::vector<double> ones(d, 1.0);
  for (const auto& s : shell_blocks(ones, n, n + 1)) {
    RankOneTerm t{s, 1.0, {}};
    for (std::size_t j = 0; j < d; ++j)
      t.factors.push_back(Factor1D::block(s[j], [](Int) { return Complex{1.0}; }));
    out.add_term(std::move(t));
  }
  return out;
}

G1Result g1_poly(int n, double p, const SmoothnessProfile& profile) {
  const std::size_t d = profile.dim();
  if (profile.nu != static_cast<int>(d))
    throw std::invalid_argument("g1 needs r = (r1, ..., r1)");
  if (!(p >= 2.0)) throw std::invalid_argument("g1 is built for p >= 2");
  auto dn = dn_poly(n, d);
  if (dn.empty()) throw std::invalid_argument("g1 needs n >= d");
  const double r1 = profile.r1();
  const double scale = std::exp2(-n * (r1 + 1.0 - 1.0 / p)) *
                       std::pow(static_cast<double>(n), -(static_cast<double>(d) - 1.0) / p);
  const std::vector<double> zero(d, 0.0);
  const double deriv = lp_norm(weyl_derivative(dn, profile.r, zero), p);
  if (!(deriv > 0.0)) throw std::runtime_error("g1: derivative norm vanished");
  G1Result res{std::move(dn), 1.0 / (scale * deriv)};
  res.g *= res.c5 * scale;
  return res;
}

namespace {

// sum over the 1-D block s (both signs) of |k|^{-2r}
double block_sum_1d(int s, double r) {
  const Int lo = Int{1} << (s - 1), hi = (Int{1} << s) - 1;
  double acc = 0.0;
  for (Int k = hi; k >= lo; --k) acc += std::pow(static_cast<double>(k), -2.0 * r);
  return 2.0 * acc;
}

}  // namespace

double rms_bernoulli_block(const BlockIndex& s, const std::vector<double>& r) {
  if (s.dim() != r.size()) throw std::invalid_argument("dimension mismatch");
  double beta2 = 1.0;
  for (std::size_t j = 0; j < s.dim(); ++j) beta2 *= block_sum_1d(s[j], r[j]);
  return std::sqrt(beta2 / std::exp2(s.l1()));
}

TailExtremal tail_extremal_l2(const SmoothnessProfile& profile, const CrossSpec& spec,
                              int depth, const std::vector<double>& alpha_in) {
  const std::size_t d = profile.dim();
  if (spec.dim() != d) throw std::invalid_argument("cross dimension mismatch");
  if (depth < 1) throw std::invalid_argument("tail depth must be >= 1");
  const std::vector<double> alpha = alpha_in.empty() ? std::vector<double>(d, 0.0) : alpha_in;
  if (alpha.size() != d) throw std::invalid_argument("alpha dimension mismatch");

  const auto blocks = shell_blocks(spec.weights, spec.level, spec.level + depth);
  if (blocks.empty()) throw std::invalid_argument("no tail blocks in range");

  std::vector<double> mu(blocks.size());
  double total = 0.0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    mu[i] = rms_bernoulli_block(blocks[i], profile.r);
    total += mu[i] * mu[i];
  }
  const double norm = std::sqrt(total);

  TailExtremal out{TensorBlockPoly(d), TensorBlockPoly(d), norm};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& s = blocks[i];
    // c_s = mu_s / 2^{||s||_1/2} / norm; then ||phi||_2 = 1 and the tail sum is `norm`
    const double c = mu[i] / std::exp2(0.5 * s.l1()) / norm;
    RankOneTerm phi{s, c, {}}, f{s, c, {}};
    for (std::size_t j = 0; j < d; ++j) {
      phi.factors.push_back(Factor1D::block(s[j], [](Int) { return Complex{1.0}; }));
      f.factors.push_back(Factor1D::block(
          s[j], [&](Int k) { return bernoulli_weight_1d(k, profile.r[j], alpha[j]); }));
    }
    out.phi.add_term(std::move(phi));
    out.f.add_term(std::move(f));
  }
  return out;
}

std::uint64_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

double Lcg::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SparseTrigPoly random_poly(std::uint64_t seed, const std::vector<BlockIndex>& region,
                           AmplitudeLaw law) {
  if (region.empty()) throw std::invalid_argument("random_poly: empty region");
  const std::size_t d = region.front().dim();
  SparseTrigPoly out(d);
  Lcg rng(seed);
  for (const auto& s : region) {
    if (s.dim() != d) throw std::invalid_argument("random_poly: mixed dimensions");
    for (const auto& k : rho_block(s)) {
      const double sign = (rng.next() >> 63) ? -1.0 : 1.0;
      if (law == AmplitudeLaw::rademacher) {
        out.set(k, sign);
      } else {
        out.set(k, std::polar(sign, 2.0 * std::numbers::pi * rng.uniform()));
      }
    }
  }
  return out;
}

SeparableFunction w1_representative(const std::vector<double>& r,
                                    const std::vector<double>& alpha, Int L) {
  if (r.size() != alpha.size() || r.empty())
    throw std::invalid_argument("r/alpha length mismatch");
  if (L < 1) throw std::invalid_argument("Fejer order must be >= 1");
  SeparableFunction out;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!(r[j] > 0.0)) throw std::invalid_argument("smoothness must be positive");
    Factor1D f;
    f.lo = -L;
    f.c.resize(static_cast<std::size_t>(2 * L + 1));
    for (Int k = -L; k <= L; ++k) {
      const double fejer = 1.0 - static_cast<double>(std::abs(k)) / static_cast<double>(L + 1);
      f.c[static_cast<std::size_t>(k + L)] = fejer * bernoulli_weight_1d(k, r[j], alpha[j]);
    }
    out.factors.push_back(std::move(f));
  }
  return out;
}

}  // namespace hcross
