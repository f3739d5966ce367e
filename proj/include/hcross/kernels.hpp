#pragma once

#include <cstdint>
#include <vector>

#include "hcross/tensor.hpp"
#include "hcross/trigpoly.hpp"

namespace hcross {

/// de la Vallee Poussin multiplier: 1 on |k| <= l, linear ramp to 0 at 2l.
double vp_weight(Int l, Int k);

/// One factor of A_s: vp(2^s, k) - vp(2^{s-1}, k), with the lower kernel
/// replaced by the DC projector [k == 0] when s == 1.
double as_weight_1d(int s, Int k);
double as_weight(const BlockIndex& s, const FreqIndex& k);

/// e^{-i sign(k) alpha pi / 2} |k|^{-r}, zero at k == 0.
Complex bernoulli_weight_1d(Int k, double r, double alpha);

enum class MultiplierKind { valle_poussin, a_block, bernoulli };

struct MultiplierSpec {
  MultiplierKind kind = MultiplierKind::valle_poussin;
  std::vector<Int> l;  // valle_poussin, one level per dimension
  BlockIndex s;        // a_block
  std::vector<double> r, alpha;  // bernoulli

  static MultiplierSpec valle_poussin(std::vector<Int> l);
  static MultiplierSpec a_block(BlockIndex s);
  static MultiplierSpec bernoulli(std::vector<double> r, std::vector<double> alpha);

  std::size_t dim() const;
  Complex weight(const FreqIndex& k) const;
};

SparseTrigPoly apply_multiplier(const SparseTrigPoly& f, const MultiplierSpec& m);

/// Truncated Bernoulli kernel F_r(., alpha) on the union of rho(s), s in region.
SparseTrigPoly bernoulli_coeffs(const std::vector<double>& r, const std::vector<double>& alpha,
                                const std::vector<BlockIndex>& region);
/// Same coefficients, one rank-one term per block.
TensorBlockPoly bernoulli_tensor(const std::vector<double>& r, const std::vector<double>& alpha,
                                 const std::vector<BlockIndex>& region);

/// d_n = sum over ||s||_1 = n of the block indicator sums; empty when n < d.
TensorBlockPoly dn_poly(int n, std::size_t d);

struct G1Result {
  TensorBlockPoly g;
  double c5 = 0.0;
};

/// C5 2^{-n(r1+1-1/p)} n^{-(d-1)/p} d_n with C5 fixed by ||g^{(r)}||_p = 1
/// (derivative taken with alpha = 0). Needs an equal-entry profile.
G1Result g1_poly(int n, double p, const SmoothnessProfile& profile);

struct TailExtremal {
  TensorBlockPoly f;    // phi * F_r
  TensorBlockPoly phi;  // ||phi||_2 = 1
  /// Closed form of ||f - S_Q f||_{B_{2,1}}: (sum_s mu_s^2)^{1/2}.
  double predicted_error = 0.0;
};

/// mu_s = (sum_{k in rho(s)} prod |k_j|^{-2 r_j})^{1/2} / 2^{||s||_1 / 2}
double rms_bernoulli_block(const BlockIndex& s, const std::vector<double>& r);

/// Extremal L_2 function for the Cauchy-Schwarz step: phi is constant in
/// modulus on each block with spec.level <= (s, spec.weights) < spec.level + depth,
/// block amplitudes chosen so the tail B_{2,1} error is maximal for ||phi||_2 = 1.
TailExtremal tail_extremal_l2(const SmoothnessProfile& profile, const CrossSpec& spec,
                              int depth, const std::vector<double>& alpha = {});

/// 64-bit LCG, state = state * 6364136223846793005 + 1442695040888963407.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();

 private:
  std::uint64_t state_;
};

enum class AmplitudeLaw {
  unit_phase,  // e^{i theta} times a Rademacher sign
  rademacher,  // real +-1
};

SparseTrigPoly random_poly(std::uint64_t seed, const std::vector<BlockIndex>& region,
                           AmplitudeLaw law = AmplitudeLaw::unit_phase);

/// prod_j phi_j(x_j) given by dense 1-D coefficient runs.
struct SeparableFunction {
  std::vector<Factor1D> factors;
  std::size_t dim() const { return factors.size(); }
};

/// Fejer kernel of order L convolved with F_r(., alpha), per coordinate.
/// The Fejer kernel is nonnegative with unit L_1 norm.
SeparableFunction w1_representative(const std::vector<double>& r,
                                    const std::vector<double>& alpha, Int L);

}  // namespace hcross
