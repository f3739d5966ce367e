#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hcross/index.hpp"
#include "hcross/trigpoly.hpp"

namespace hcross {

/// value ~ 2^{log2C} 2^{-a n} n^b
struct RateFit {
  double a = 0.0;
  double b = 0.0;
  double log2C = 0.0;
  double residual = 0.0;  // RMS of the log2 misfit
  int points = 0;
  double n_min = 0.0, n_max = 0.0;  // fitted window
};

/// Least squares on log2 v = log2C - a n + b log2 n (b fixed at 0 when
/// with_log is false). Needs >= 4 points with positive values.
RateFit rate_fit(const std::vector<std::pair<double, double>>& points, bool with_log = true);

/// Points sorted by n with the two smallest dropped when at least 6 remain
/// available, so a fit never runs on fewer than 4 points.
std::vector<std::pair<double, double>> fit_window(std::vector<std::pair<double, double>> points);

/// v ~ C m^e on log2 v = log2C + e log2 m.
struct PowerFit {
  double exponent = 0.0;
  double log2C = 0.0;
  double residual = 0.0;
};
PowerFit power_fit(const std::vector<std::pair<double, double>>& points);

enum class Theorem { T1, T1d1, T2, T2d1, T3, T3d1, T4, T4d1, Remark1, Remark2, G, D, E1dim };

Theorem parse_theorem(const std::string& name);
std::string to_string(Theorem t);

struct RateCase {
  Theorem id = Theorem::T1;
  double p = 2.0;
  double q = 2.0;
  SmoothnessProfile profile;
};

struct PredictedRate {
  double a = 0.0;
  double b = 0.0;
};

/// Exponents (a, b) of 2^{-a n} n^b predicted for the case; throws
/// std::domain_error naming the violated hypothesis.
PredictedRate theory_rate(const RateCase& c);

/// sum over (s, gamma') >= l of 2^{-beta (s, gamma)}, shells of unit width
/// added until a shell adds less than eps times the running total.
double lemma_a_sum(double beta, const SmoothnessProfile& profile, double l, double eps = 1e-12);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

/// ||t||_p <= 2^d prod_j n_j^{1/q - 1/p} ||t||_q for t with |k_j| <= n_j.
InequalityCheck nikolskii_check(const SparseTrigPoly& t, double p, double q,
                                const std::vector<Int>& box);

/// ||t^{(r)}||_p / ||t||_p with r = alpha = (r1, ..., r1); t must lie in T(Q^1_n).
double bernstein_ratio(const SparseTrigPoly& t, int n, double p, double r1);

/// lhs = ||f||_q^q, rhs = sum_s ||delta_s f||_p^q 2^{||s||_1 (1/p - 1/q) q}.
InequalityCheck lemma_b_check(const SparseTrigPoly& f, double p, double q);

/// ||sum_{|k| <= m} e^{ikx}||_q by quadrature.
double dirichlet_norm_1d(Int m, double q, double oversampling = 8.0);

/// min over t in T(cross) of the delta-block B_{q,1} distance, d = 1, found by
/// grid seeding and compass search over the real and imaginary parts of t.
double brute_force_block_error(const SparseTrigPoly& f, const CrossSpec& cross, double q);

struct CheckRecord {
  std::string check;
  nlohmann::json params;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

nlohmann::json to_json(const CheckRecord& r);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckRecord> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace hcross
