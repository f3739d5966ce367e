#pragma once

#include <functional>
#include <vector>

#include "hcross/trigpoly.hpp"

namespace hcross {

/// Dense 1-D coefficient run c[i] at frequency lo + i.
struct Factor1D {
  Int lo = 0;
  std::vector<Complex> c;

  Int hi() const { return lo + static_cast<Int>(c.size()) - 1; }
  Complex at(Int k) const;
  Int max_abs_freq() const;
  double coeff_l2() const;

  /// Symmetric run over -(2^s - 1)..(2^s - 1), zero outside the dyadic block s.
  static Factor1D block(int s, const std::function<Complex(Int)>& coeff);
};

/// weight * prod_j factors[j](x_j), tagged with the dyadic block that holds it.
struct RankOneTerm {
  BlockIndex tag;
  Complex weight = 1.0;
  std::vector<Factor1D> factors;
};

/// Sum of rank-one terms on pairwise distinct dyadic blocks.
class TensorBlockPoly {
 public:
  explicit TensorBlockPoly(std::size_t d = 1);

  std::size_t dim() const { return d_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<RankOneTerm>& terms() const { return terms_; }

  /// Throws when a factor reaches outside the tag block or the tag is taken.
  void add_term(RankOneTerm t);
  TensorBlockPoly& operator*=(Complex a);

  std::vector<Int> bandwidth() const;
  /// Parseval: the blocks are disjoint, so squared norms add.
  double coeff_l2() const;

 private:
  std::size_t d_;
  std::vector<RankOneTerm> terms_;
};

SparseTrigPoly to_sparse(const TensorBlockPoly& t);

/// Samples of the factor at 2 pi m / M, m = 0..M-1.
std::vector<Complex> sample_factor(const Factor1D& f, std::int64_t M);
/// ((1/M) sum |u_m|^p)^{1/p} on the grid chosen for `oversampling`.
double factor_lp_norm(const Factor1D& f, double p, double oversampling = 8.0);

TensorBlockPoly weyl_derivative(const TensorBlockPoly& t, const std::vector<double>& r,
                                const std::vector<double>& alpha);
TensorBlockPoly delta_block(const TensorBlockPoly& t, const BlockIndex& s);
TensorBlockPoly restrict_to_cross(const TensorBlockPoly& t, const CrossSpec& spec);
/// Terms whose tag lies outside the cross, i.e. t - S_Q t.
TensorBlockPoly cross_complement(const TensorBlockPoly& t, const CrossSpec& spec);

}  // namespace hcross
