#include "hcross/index.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hcross {

BlockIndex::BlockIndex(std::vector<int> values) : s(std::move(values)) {
  for (int v : s)
    if (v < 1) throw std::invalid_argument("block index entries must be >= 1");
}

BlockIndex::BlockIndex(std::initializer_list<int> values)
    : BlockIndex(std::vector<int>(values)) {}

int BlockIndex::l1() const { return std::accumulate(s.begin(), s.end(), 0); }

namespace {

template <class T>
std::string join_vec(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) os << ',';
    os << v[j];
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string to_string(const BlockIndex& s) { return join_vec(s.s); }
std::string to_string(const FreqIndex& k) { return join_vec(k.k); }

double SmoothnessProfile::gamma_prime_sum() const {
  return std::accumulate(gamma_prime.begin(), gamma_prime.end(), 0.0);
}

SmoothnessProfile make_profile(std::vector<double> r,
                               const GammaPrimeRule& rule) {
  if (r.empty()) throw std::invalid_argument("smoothness vector is empty");
  for (double v : r)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("smoothness entries must be positive");
  std::sort(r.begin(), r.end());

  SmoothnessProfile p;
  p.r = r;
  p.nu = static_cast<int>(std::count(r.begin(), r.end(), r.front()));
  p.gamma.resize(r.size());
  p.gamma_prime.resize(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) p.gamma[j] = r[j] / r.front();

  if (rule.values && rule.values->size() != r.size() - p.nu)
    throw std::invalid_argument("gamma' override must list one value per "
                                "non-minimal coordinate");
  if (!(rule.fraction > 0.0 && rule.fraction < 1.0))
    throw std::invalid_argument("gamma' fraction must lie in (0,1)");

  for (std::size_t j = 0; j < r.size(); ++j) {
    if (static_cast<int>(j) < p.nu) {
      p.gamma_prime[j] = p.gamma[j];
      continue;
    }
    double g = rule.values ? (*rule.values)[j - p.nu]
                           : 1.0 + rule.fraction * (p.gamma[j] - 1.0);
    if (!(g > 1.0 && g < p.gamma[j]))
      throw std::invalid_argument("gamma'_j must satisfy 1 < gamma'_j < gamma_j");
    p.gamma_prime[j] = g;
  }
  return p;
}

double CrossSpec::weighted(const BlockIndex& s) const {
  if (s.dim() != weights.size())
    throw std::invalid_argument("block dimension does not match cross");
  double acc = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) acc += s[j] * weights[j];
  return acc;
}

bool CrossSpec::contains_freq(const FreqIndex& k) const {
  for (Int v : k.k)
    if (v == 0) return false;
  return contains(block_of(k));
}

CrossVariant parse_cross_variant(const std::string& name) {
  if (name == "gamma") return CrossVariant::gamma;
  if (name == "gamma_prime") return CrossVariant::gamma_prime;
  if (name == "ones") return CrossVariant::ones;
  throw std::invalid_argument("unknown cross variant '" + name + "'");
}

std::string to_string(CrossVariant v) {
  switch (v) {
    case CrossVariant::gamma: return "gamma";
    case CrossVariant::gamma_prime: return "gamma_prime";
    case CrossVariant::ones: return "ones";
  }
  return "?";
}

CrossSpec make_cross(const SmoothnessProfile& profile, CrossVariant variant,
                     double level) {
  CrossSpec c;
  c.level = level;
  switch (variant) {
    case CrossVariant::gamma: c.weights = profile.gamma; break;
    case CrossVariant::gamma_prime: c.weights = profile.gamma_prime; break;
    case CrossVariant::ones: c.weights.assign(profile.dim(), 1.0); break;
  }
  return c;
}

CrossSpec ones_cross(std::size_t d, double level) {
  return CrossSpec{level, std::vector<double>(d, 1.0)};
}

int block_of_1d(Int k) {
  if (k == 0) throw std::invalid_argument("frequency 0 lies in no dyadic block");
  auto a = static_cast<std::uint64_t>(k < 0 ? -k : k);
  return static_cast<int>(std::bit_width(a));
}

BlockIndex block_of(const FreqIndex& k) {
  std::vector<int> s(k.dim());
  for (std::size_t j = 0; j < k.dim(); ++j) s[j] = block_of_1d(k[j]);
  return BlockIndex(std::move(s));
}

std::vector<FreqIndex> rho_block(const BlockIndex& s) {
  const std::size_t d = s.dim();
  // per-dimension values in ascending order
  std::vector<std::vector<Int>> axis(d);
  for (std::size_t j = 0; j < d; ++j) {
    Int lo = Int{1} << (s[j] - 1), hi = Int{1} << s[j];
    for (Int v = -(hi - 1); v <= -lo; ++v) axis[j].push_back(v);
    for (Int v = lo; v < hi; ++v) axis[j].push_back(v);
  }
  std::vector<FreqIndex> out;
  out.reserve(rho_cardinality(s));
  std::vector<Int> cur(d);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == d) {
      out.emplace_back(cur);
      return;
    }
    for (Int v : axis[j]) {
      cur[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

std::uint64_t rho_cardinality(const BlockIndex& s) {
  return std::uint64_t{1} << s.l1();
}

std::vector<BlockIndex> shell_blocks(const std::vector<double>& weights,
                                     double lo, double hi) {
  const std::size_t d = weights.size();
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("cross weights must be positive");
  double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<BlockIndex> out;
  std::vector<int> cur(d, 1);
  // remaining minimum contribution of coordinates after j (all set to 1)
  std::vector<double> tail_min(d + 1, 0.0);
  for (std::size_t j = d; j-- > 0;) tail_min[j] = tail_min[j + 1] + weights[j];
  std::function<void(std::size_t, double)> rec = [&](std::size_t j, double acc) {
    if (j == d) {
      if (acc >= lo && acc < hi) out.emplace_back(cur);
      return;
    }
    for (int v = 1;; ++v) {
      double a = acc + v * weights[j];
      if (!(a + tail_min[j + 1] < hi)) break;
      cur[j] = v;
      rec(j + 1, a);
    }
  };
  if (wsum < hi) rec(0, 0.0);
  return out;
}

std::vector<BlockIndex> cross_blocks(const CrossSpec& spec) {
  return shell_blocks(spec.weights, -1.0, spec.level);
}

std::uint64_t cross_cardinality(const CrossSpec& spec) {
  std::uint64_t total = 0;
  for (const auto& s : cross_blocks(spec)) total += rho_cardinality(s);
  return total;
}

std::vector<BlockIndex> box_blocks(std::size_t d, int max_s) {
  std::vector<BlockIndex> out;
  if (max_s < 1 || d == 0) return out;
  std::vector<int> cur(d, 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t j = d;
    while (j-- > 0) {
      if (cur[j] < max_s) {
        ++cur[j];
        break;
      }
      cur[j] = 1;
      if (j == 0) return out;
    }
  }
}

}  // namespace hcross
