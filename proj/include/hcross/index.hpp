#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcross {

using Int = std::int64_t;

/// Frequency vector k in Z^d.
struct FreqIndex {
  std::vector<Int> k;

  FreqIndex() = default;
  explicit FreqIndex(std::vector<Int> values) : k(std::move(values)) {}
  FreqIndex(std::initializer_list<Int> values) : k(values) {}

  std::size_t dim() const { return k.size(); }
  Int operator[](std::size_t j) const { return k[j]; }

  auto operator<=>(const FreqIndex&) const = default;
};

/// Dyadic block label s in N^d (every s_j >= 1).
struct BlockIndex {
  std::vector<int> s;

  BlockIndex() = default;
  explicit BlockIndex(std::vector<int> values);
  BlockIndex(std::initializer_list<int> values);

  std::size_t dim() const { return s.size(); }
  int operator[](std::size_t j) const { return s[j]; }
  int l1() const;

  auto operator<=>(const BlockIndex&) const = default;
};

std::string to_string(const BlockIndex& s);
std::string to_string(const FreqIndex& k);

/// Smoothness vector r in canonical ascending order, with the derived
/// multiplicity nu and the weight vectors gamma = r / r_1 and gamma'.
struct SmoothnessProfile {
  std::vector<double> r;
  int nu = 0;
  std::vector<double> gamma;
  std::vector<double> gamma_prime;

  std::size_t dim() const { return r.size(); }
  double r1() const { return r.front(); }
  double gamma_prime_sum() const;
};

/// How gamma'_j is placed inside (1, gamma_j) for the non-minimal coordinates.
/// `fraction` t gives gamma'_j = 1 + t (gamma_j - 1); the default 0.5 is the
/// midpoint. `values`, when set, supplies gamma'_j for j > nu explicitly.
struct GammaPrimeRule {
  double fraction = 0.5;
  std::optional<std::vector<double>> values;
};

SmoothnessProfile make_profile(std::vector<double> r,
                               const GammaPrimeRule& rule = {});

/// Step-hyperbolic cross: all blocks s with (s, weights) < level.
struct CrossSpec {
  double level = 1.0;
  std::vector<double> weights;

  std::size_t dim() const { return weights.size(); }
  double weighted(const BlockIndex& s) const;
  bool contains(const BlockIndex& s) const { return weighted(s) < level; }
  bool contains_freq(const FreqIndex& k) const;
};

enum class CrossVariant { gamma, gamma_prime, ones };

CrossVariant parse_cross_variant(const std::string& name);
std::string to_string(CrossVariant v);

CrossSpec make_cross(const SmoothnessProfile& profile, CrossVariant variant,
                     double level);
CrossSpec ones_cross(std::size_t d, double level);

/// Block containing k; throws std::invalid_argument when some k_j == 0.
BlockIndex block_of(const FreqIndex& k);
int block_of_1d(Int k);

/// All frequencies of rho(s), lexicographic in k.
std::vector<FreqIndex> rho_block(const BlockIndex& s);
std::uint64_t rho_cardinality(const BlockIndex& s);

/// Blocks with (s, weights) < level, lexicographic.
std::vector<BlockIndex> cross_blocks(const CrossSpec& spec);
std::uint64_t cross_cardinality(const CrossSpec& spec);

/// Blocks with lo <= (s, weights) < hi, lexicographic.
std::vector<BlockIndex> shell_blocks(const std::vector<double>& weights,
                                     double lo, double hi);

/// Blocks with 1 <= s_j <= max_s for every j.
std::vector<BlockIndex> box_blocks(std::size_t d, int max_s);

}  // namespace hcross
