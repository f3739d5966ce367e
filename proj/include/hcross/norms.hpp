#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hcross/tensor.hpp"
#include "hcross/trigpoly.hpp"

namespace hcross {

enum class NormKind { lp, bq1, besov, h_sup };
/// delta: blocks are the sharp partial sums delta_s; a_kernel: blocks are A_s.
enum class BlockMode { delta, a_kernel };

struct NormSpec {
  NormKind kind = NormKind::lp;
  double p = 2.0;  // p for lp/besov/h_sup, q for bq1
  double theta = 1.0;
  std::optional<std::vector<double>> r;
  BlockMode mode = BlockMode::delta;

  /// Throws std::invalid_argument on an inconsistent combination.
  void validate() const;
};

BlockMode parse_block_mode(const std::string& s);
std::string to_string(BlockMode m);

/// Above this many grid points the dense evaluators refuse to run.
inline constexpr std::int64_t kMaxGridPoints = std::int64_t{1} << 26;
/// Cap on A^2 sum_j M_j for the moment method (A multisets, M_j grid sizes).
inline constexpr double kMaxMomentWork = 0x1p35;

/// ((2 pi)^{-d} int |f|^p)^{1/p} by the rectangle rule on `grid`.
double lp_norm(const SparseTrigPoly& f, double p, const QuadratureGrid& grid);
/// Same on the default oversampled grid for the bandwidth of f.
double lp_norm(const SparseTrigPoly& f, double p, double oversampling = 8.0);
/// Direct-evaluation, single-threaded version kept as the test oracle.
double lp_norm_reference(const SparseTrigPoly& f, double p, const QuadratureGrid& grid);

/// Rank-one term: |weight| times the product of 1-D norms.
double lp_norm_tensor(const RankOneTerm& term, double p, double oversampling = 8.0);
/// Parseval at p = 2, a single term by product, even integer p by exact moments,
/// otherwise a dense tensor grid.
double lp_norm(const TensorBlockPoly& t, double p, double oversampling = 8.0);
/// ||t||_{2m} from sum over multisets a, b of size m of
/// mult(a) mult(b) W_a conj(W_b) prod_j <P_{a,j}, P_{b,j}>, exact up to roundoff.
double lp_norm_moment(const TensorBlockPoly& t, int m, bool serial = false);
double lp_norm_dense(const TensorBlockPoly& t, double p, double oversampling = 8.0,
                     bool serial = false);

/// Blocks on which A_s f can be nonzero.
std::vector<BlockIndex> a_support_blocks(const SparseTrigPoly& f);

/// sum_s ||delta_s f||_q (q > 1) or sum_s ||A_s f||_q.
double bq1_norm(const SparseTrigPoly& f, double q, BlockMode mode, double oversampling = 8.0);
double bq1_norm(const TensorBlockPoly& t, double q, double oversampling = 8.0);

/// (sum_s 2^{(s,r) theta} ||block_s f||_p^theta)^{1/theta}; theta = inf gives the sup.
double besov_norm(const SparseTrigPoly& f, const std::vector<double>& r, double p, double theta,
                  BlockMode mode = BlockMode::delta, double oversampling = 8.0);
double besov_norm(const TensorBlockPoly& t, const std::vector<double>& r, double p,
                  double theta, double oversampling = 8.0);
double h_norm(const SparseTrigPoly& f, const std::vector<double>& r, double p,
              BlockMode mode = BlockMode::delta, double oversampling = 8.0);

double evaluate_norm(const SparseTrigPoly& f, const NormSpec& spec, double oversampling = 8.0);

}  // namespace hcross
