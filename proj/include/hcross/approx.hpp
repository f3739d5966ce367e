#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hcross/kernels.hpp"
#include "hcross/tensor.hpp"
#include "hcross/trigpoly.hpp"

namespace hcross {

/// Target space of an error measurement: `bq1:q` (delta blocks), `lq:q`, `b11` (A_s blocks).
struct SpaceSpec {
  enum class Kind { bq1, lq, b11 } kind = Kind::bq1;
  double q = 2.0;

  static SpaceSpec parse(const std::string& text);
  std::string to_string() const;
};

struct ErrorReport {
  int n = 0;
  std::uint64_t cardinality = 0;
  double value_EE = 0.0;       // ||f - S_Q f||
  double value_E_upper = 0.0;  // some t in T(Q) reaches this
  double value_E_lower = 0.0;  // no t in T(Q) does better
  SpaceSpec space;
  CrossSpec cross;
  CrossVariant variant = CrossVariant::gamma;
  std::uint64_t seed = 0;
};

/// The function under study in a sweep.
using Subject = std::variant<SparseTrigPoly, TensorBlockPoly, SeparableFunction>;

/// sum over blocks outside the cross of ||delta_s f||_q, q > 1.
double fourier_tail_error(const SparseTrigPoly& f, const CrossSpec& cross, double q,
                          double oversampling = 8.0);
double fourier_tail_error(const TensorBlockPoly& f, const CrossSpec& cross, double q,
                          double oversampling = 8.0);

/// min over t in T(Q) of ||f - t||_{B_{q,1}} in the delta-block norm. Blocks
/// inside the cross are matched exactly by t = S_Q f and the others are out of
/// reach, so this is the B_{q,1} norm of f - S_Q f.
double best_error_block(const SparseTrigPoly& f, const CrossSpec& cross, double q,
                        double oversampling = 8.0);
double best_error_block(const TensorBlockPoly& f, const CrossSpec& cross, double q,
                        double oversampling = 8.0);

/// Blocks used by the approximant: (s, w) < level - sum_j w_j.
std::vector<BlockIndex> vp_inner_blocks(const CrossSpec& cross);

/// t_n = sum over (s, w) < n - w(d) of A_s f. Needs n > 3 w(d); the result is
/// checked to lie in T(Q) and std::logic_error is thrown otherwise.
SparseTrigPoly vp_approximant(const SparseTrigPoly& f, const CrossSpec& cross);
SparseTrigPoly vp_approximant(const SparseTrigPoly& f, double n, const SmoothnessProfile& profile);

/// ||f - S_Q f||_q by quadrature.
double lq_error(const SparseTrigPoly& f, const CrossSpec& cross, double q,
                double oversampling = 8.0);
double lq_error(const TensorBlockPoly& f, const CrossSpec& cross, double q,
                double oversampling = 8.0);

/// ||h||_2^2 / ||h^||_{l1} with h = f - S_Q f: a lower bound for ||f - t||_1
/// over t in T(Q), hence for the B_{1,1} error.
double duality_lower_bound(const SparseTrigPoly& f, const CrossSpec& cross);

struct SeparableErrors {
  double fourier = 0.0;  // ||f - S_Q f||_{B_{1,1}}
  double vp = 0.0;       // ||f - t_n||_{B_{1,1}}
  double lower = 0.0;    // duality bound
};

/// B_{1,1} errors (A_s blocks) for a separable f, evaluated block by block:
/// only blocks with neighbours on both sides of the split need a 2-D grid.
SeparableErrors separable_b11_errors(const SeparableFunction& f, const CrossSpec& cross,
                                     double oversampling = 4.0);

ErrorReport evaluate_errors(const Subject& f, const CrossSpec& cross, const SpaceSpec& space,
                            double oversampling = 8.0);

struct SweepConfig {
  std::function<Subject(int n)> make;
  SmoothnessProfile profile;
  CrossVariant variant = CrossVariant::gamma;
  SpaceSpec space;
  int n_lo = 1, n_hi = 0;
  std::uint64_t seed = 0;
  double oversampling = 8.0;
};

/// One report per n in [n_lo, n_hi], ordered by n; rows run in parallel.
std::vector<ErrorReport> error_sweep(const SweepConfig& cfg);

/// `n,cardinality,value_EE,value_E_upper,value_E_lower,space,cross_variant,seed`
void write_sweep_csv(std::ostream& out, const std::vector<ErrorReport>& rows);

}  // namespace hcross
