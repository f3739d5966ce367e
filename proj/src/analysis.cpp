#include "hcross/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "hcross/approx.hpp"
#include "hcross/fft.hpp"
#include "hcross/grid_kernels.hpp"
#include "hcross/kernels.hpp"
#include "hcross/norms.hpp"
#include "hcross/tensor.hpp"

namespace hcross {

namespace {

RateFit solve_fit(const std::vector<std::pair<double, double>>& pts, bool with_log) {
  if (pts.size() < 4) throw std::invalid_argument("rate fit needs at least 4 points");
  const auto rows = static_cast<Eigen::Index>(pts.size());
  const Eigen::Index cols = with_log ? 3 : 2;
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto [n, v] = pts[static_cast<std::size_t>(i)];
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("rate fit needs positive values");
    if (with_log && !(n > 0.0)) throw std::invalid_argument("log term needs n > 0");
    A(i, 0) = 1.0;
    A(i, 1) = -n;
    if (with_log) A(i, 2) = std::log2(n);
    y(i) = std::log2(v);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  if (qr.rank() < cols) throw std::invalid_argument("rate fit design matrix is degenerate");
  const Eigen::VectorXd x = qr.solve(y);
  RateFit f;
  f.log2C = x(0);
  f.a = x(1);
  f.b = with_log ? x(2) : 0.0;
  f.residual = std::sqrt((A * x - y).squaredNorm() / static_cast<double>(rows));
  f.points = static_cast<int>(rows);
  f.n_min = std::numeric_limits<double>::infinity();
  f.n_max = -f.n_min;
  for (const auto& [n, v] : pts) {
    f.n_min = std::min(f.n_min, n);
    f.n_max = std::max(f.n_max, n);
  }
  return f;
}

}  // namespace

RateFit rate_fit(const std::vector<std::pair<double, double>>& points, bool with_log) {
  return solve_fit(points, with_log);
}

std::vector<std::pair<double, double>> fit_window(std::vector<std::pair<double, double>> points) {
  std::sort(points.begin(), points.end());
  if (points.size() >= 6) points.erase(points.begin(), points.begin() + 2);
  return points;
}

PowerFit power_fit(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> logm;
  for (const auto& [m, v] : points) {
    if (!(m > 0.0)) throw std::invalid_argument("power fit needs m > 0");
    logm.emplace_back(std::log2(m), v);
  }
  // log2 v = log2C - a log2 m, so the exponent is -a
  const RateFit f = solve_fit(logm, false);
  return {-f.a, f.log2C, f.residual};
}

Theorem parse_theorem(const std::string& name) {
  static const std::pair<const char*, Theorem> table[] = {
      {"T1", Theorem::T1},         {"T1d1", Theorem::T1d1},       {"T2", Theorem::T2},
      {"T2d1", Theorem::T2d1},     {"T3", Theorem::T3},           {"T3d1", Theorem::T3d1},
      {"T4", Theorem::T4},         {"T4d1", Theorem::T4d1},       {"Remark1", Theorem::Remark1},
      {"Remark2", Theorem::Remark2}, {"G", Theorem::G},           {"D", Theorem::D},
      {"E1dim", Theorem::E1dim}};
  for (const auto& [k, v] : table)
    if (name == k) return v;
  throw std::invalid_argument("unknown theorem id '" + name + "'");
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T1d1: return "T1d1";
    case Theorem::T2: return "T2";
    case Theorem::T2d1: return "T2d1";
    case Theorem::T3: return "T3";
    case Theorem::T3d1: return "T3d1";
    case Theorem::T4: return "T4";
    case Theorem::T4d1: return "T4d1";
    case Theorem::Remark1: return "Remark1";
    case Theorem::Remark2: return "Remark2";
    case Theorem::G: return "G";
    case Theorem::D: return "D";
    case Theorem::E1dim: return "E1dim";
  }
  return "?";
}

PredictedRate theory_rate(const RateCase& c) {
  const auto& pr = c.profile;
  if (pr.r.empty()) throw std::domain_error("empty smoothness profile");
  const int d = static_cast<int>(pr.dim());
  const double p = c.p, q = c.q, r1 = pr.r1();
  const double nu = pr.nu;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(to_string(c.id) + " requires " + what);
  };
  auto finite_gt1 = [&](double x) { return x > 1.0 && std::isfinite(x); };
  need(r1 > 0.0, "r_1 > 0");
  const double xi = std::max(0.5, 1.0 - 1.0 / p);

  switch (c.id) {
    case Theorem::T1:
    case Theorem::Remark1:
      need(d >= 2, "d >= 2");
      need(finite_gt1(p), "1 < p < inf");
      need(q == p, "q = p");
      return {r1, (c.id == Theorem::T1 ? nu - 1.0 : d - 1.0) * xi};
    case Theorem::T1d1:
      need(d == 1, "d = 1");
      need(finite_gt1(p), "1 < p < inf");
      need(q == p, "q = p");
      return {r1, 0.0};
    case Theorem::T2:
    case Theorem::Remark2:
      need(d >= 2, "d >= 2");
      need(p == 1.0 && q == 1.0, "p = q = 1");
      return {r1, c.id == Theorem::T2 ? nu - 1.0 : d - 1.0};
    case Theorem::T2d1:
      need(d == 1, "d = 1");
      need(p == 1.0 && q == 1.0, "p = q = 1");
      return {r1, 0.0};
    case Theorem::T3:
      need(d >= 2, "d >= 2");
      need(p >= 2.0 && p < q && std::isfinite(q), "2 <= p < q < inf");
      need(r1 > 1.0 / p - 1.0 / q, "r_1 > 1/p - 1/q");
      return {r1 - 1.0 / p + 1.0 / q, (nu - 1.0) * (1.0 - 1.0 / p)};
    case Theorem::T3d1:
      need(d == 1, "d = 1");
      need(p > 1.0 && p < q && std::isfinite(q), "1 < p < q < inf");
      need(r1 > 1.0 / p - 1.0 / q, "r > 1/p - 1/q");
      return {r1 - 1.0 / p + 1.0 / q, 0.0};
    case Theorem::T4:
      need(d >= 2, "d >= 2");
      need(q >= 1.0 && q <= 2.0, "1 <= q <= 2");
      need(q < p && std::isfinite(p), "q < p < inf");
      return {r1, (nu - 1.0) / 2.0};
    case Theorem::T4d1:
      need(d == 1, "d = 1");
      need(q > 1.0 && q < p && std::isfinite(p), "1 < q < p < inf");
      return {r1, 0.0};
    case Theorem::G:
      need(d >= 2, "d >= 2");
      need(finite_gt1(p), "1 < p < inf");
      need(q == p, "q = p");
      return {r1, 0.0};
    case Theorem::D:
      need(d >= 2, "d >= 2");
      need(p > 1.0 && p < q && std::isfinite(q), "1 < p < q < inf");
      need(r1 > 1.0 / p - 1.0 / q, "r_1 > 1/p - 1/q");
      return {r1 - 1.0 / p + 1.0 / q, 0.0};
    case Theorem::E1dim:
      need(d >= 2, "d >= 2");
      need(q > 1.0 && q < p && std::isfinite(p), "1 < q < p < inf");
      return {r1, 0.0};
  }
  throw std::logic_error("unhandled theorem");
}

double lemma_a_sum(double beta, const SmoothnessProfile& profile, double l, double eps) {
  if (!(beta > 0.0)) throw std::invalid_argument("lemma_a_sum needs beta > 0");
  if (!(l >= 1.0)) throw std::invalid_argument("lemma_a_sum needs l >= 1");
  const CrossSpec g{0.0, profile.gamma};
  double total = 0.0;
  for (int t = 0; t < 4096; ++t) {
    double shell = 0.0;
    for (const auto& s : shell_blocks(profile.gamma_prime, l + t, l + t + 1))
      shell += std::exp2(-beta * g.weighted(s));
    total += shell;
    if (total > 0.0 && shell < eps * total) return total;
  }
  throw std::runtime_error("lemma_a_sum did not converge");
}

InequalityCheck nikolskii_check(const SparseTrigPoly& t, double p, double q,
                                const std::vector<Int>& box) {
  if (!(q >= 1.0 && q < p && std::isfinite(p))) throw std::invalid_argument("needs 1 <= q < p < inf");
  if (box.size() != t.dim()) throw std::invalid_argument("box dimension mismatch");
  const auto bw = t.bandwidth();
  double factor = std::exp2(static_cast<double>(t.dim()));
  for (std::size_t j = 0; j < box.size(); ++j) {
    if (box[j] < 1) throw std::invalid_argument("box degrees must be >= 1");
    if (bw[j] > box[j]) throw std::invalid_argument("support of t leaves the box");
    factor *= std::pow(static_cast<double>(box[j]), 1.0 / q - 1.0 / p);
  }
  InequalityCheck c;
  c.lhs = lp_norm(t, p);
  c.rhs = factor * lp_norm(t, q);
  c.ratio = c.rhs > 0.0 ? c.lhs / c.rhs : 0.0;
  c.pass = c.lhs <= c.rhs;
  return c;
}

double bernstein_ratio(const SparseTrigPoly& t, int n, double p, double r1) {
  if (t.empty()) throw std::invalid_argument("bernstein_ratio of the zero polynomial");
  const CrossSpec q1 = ones_cross(t.dim(), n);
  for (const auto& [k, c] : t.coeffs())
    if (!q1.contains_freq(k)) throw std::invalid_argument("t is not in T(Q^1_n)");
  const std::vector<double> r(t.dim(), r1);
  const auto dt = weyl_derivative(t, r, r);
  if (p == 2.0) return dt.coeff_l2() / t.coeff_l2();
  return lp_norm(dt, p) / lp_norm(t, p);
}

InequalityCheck lemma_b_check(const SparseTrigPoly& f, double p, double q) {
  if (!(p >= 1.0 && p < q && std::isfinite(q))) throw std::invalid_argument("needs 1 <= p < q < inf");
  InequalityCheck c;
  if (f.empty()) {
    c.pass = true;
    return c;
  }
  c.lhs = std::pow(lp_norm(f, q), q);
  for (const auto& s : support_blocks(f))
    c.rhs += std::pow(lp_norm(delta_block(f, s), p), q) * std::exp2(s.l1() * (1.0 / p - 1.0 / q) * q);
  c.ratio = c.lhs / c.rhs;
  // per-block Nikolskii constant 2^d raised to q
  c.pass = c.ratio <= std::exp2(static_cast<double>(f.dim()) * q);
  return c;
}

double dirichlet_norm_1d(Int m, double q, double oversampling) {
  if (m < 1) throw std::invalid_argument("Dirichlet kernel needs m >= 1");
  if (!(q > 1.0)) throw std::invalid_argument("Dirichlet norm needs q > 1");
  Factor1D f;
  f.lo = -m;
  f.c.assign(static_cast<std::size_t>(2 * m + 1), Complex{1.0});
  const std::int64_t M = next_pow2(oversampling * (2.0 * static_cast<double>(m) + 1.0));
  const auto u = sample_factor(f, M);
  return std::pow(kernels::sum_abs_pow(u, q) / static_cast<double>(M), 1.0 / q);
}

double brute_force_block_error(const SparseTrigPoly& f, const CrossSpec& cross, double q) {
  if (f.dim() != 1) throw std::invalid_argument("brute force oracle is one-dimensional");
  std::vector<Int> freqs;
  for (const auto& s : cross_blocks(cross))
    for (const auto& k : rho_block(s)) freqs.push_back(k[0]);
  if (freqs.empty()) return bq1_norm(f, q, BlockMode::delta);
  const std::size_t dim = 2 * freqs.size();

  auto objective = [&](const std::vector<double>& x) {
    SparseTrigPoly t(1);
    for (std::size_t i = 0; i < freqs.size(); ++i) t.set({freqs[i]}, {x[2 * i], x[2 * i + 1]});
    return bq1_norm(f - t, q, BlockMode::delta);
  };

  double scale = 0.0;
  for (const auto& [k, c] : f.coeffs()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;

  // seeds: origin and a coarse random scatter in [-scale, scale]^dim
  Lcg rng(0x5eed);
  std::vector<double> best(dim, 0.0);
  double fbest = objective(best);
  for (int i = 0; i < 64; ++i) {
    std::vector<double> x(dim);
    for (auto& v : x) v = scale * (2.0 * rng.uniform() - 1.0);
    const double fx = objective(x);
    if (fx < fbest) {
      fbest = fx;
      best = x;
    }
  }

  double h = scale;
  while (h > 1e-11 * scale) {
    bool improved = false;
    for (std::size_t i = 0; i < dim; ++i) {
      for (double dir : {1.0, -1.0}) {
        auto x = best;
        x[i] += dir * h;
        const double fx = objective(x);
        if (fx < fbest) {
          fbest = fx;
          best = std::move(x);
          improved = true;
        }
      }
    }
    if (!improved) h *= 0.5;
  }
  return fbest;
}

nlohmann::json to_json(const CheckRecord& r) {
  auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  return nlohmann::json{{"check", r.check}, {"params", r.params}, {"lhs", num(r.lhs)},
                        {"rhs", num(r.rhs)},   {"ratio", num(r.ratio)},  {"pass", r.pass}};
}

// ---------------------------------------------------------------- suites

namespace {

using Records = std::vector<CheckRecord>;

CheckRecord rec(std::string check, nlohmann::json params, double lhs, double rhs, bool pass) {
  CheckRecord r{std::move(check), std::move(params), lhs, rhs, 0.0, pass};
  r.ratio = rhs != 0.0 ? lhs / rhs : (lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
  return r;
}

int uniform_int(Lcg& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Blocks of the cross (s, 1) < level, each kept with probability `keep` (never empty).
std::vector<BlockIndex> random_region(Lcg& rng, std::size_t d, int level, double keep) {
  const auto all = cross_blocks(ones_cross(d, level));
  std::vector<BlockIndex> out;
  for (const auto& s : all)
    if (rng.uniform() < keep) out.push_back(s);
  if (out.empty()) out.push_back(all[rng.next() % all.size()]);
  return out;
}

Records suite_parseval(std::uint64_t seed) {
  Records out;
  Lcg rng(seed);
  const int levels[] = {0, 12, 9, 7};
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    const auto region = random_region(rng, d, levels[d], 0.7);
    const auto f = random_poly(rng.next(), region);
    const auto grid = QuadratureGrid::for_bandwidth(f.bandwidth(), 2.0);
    const double quad = lp_norm(f, 2.0, grid);
    const double coef = f.coeff_l2();
    out.push_back(rec("parseval", {{"case", i}, {"d", d}, {"support", f.size()}, {"oversampling", 2}},
                      quad, coef, std::abs(quad - coef) <= 1e-10 * coef));
  }
  for (int i = 0; i < 5; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    const auto f = random_poly(rng.next(), random_region(rng, d, levels[d] - 1, 0.7));
    const auto bw = f.bandwidth();
    const auto grid = QuadratureGrid::for_bandwidth(bw, 2.0);
    const auto back = analyze(synthesize(f, grid), grid, bw, 1e-13);
    double err = 0.0;
    for (const auto& [k, c] : f.coeffs()) err = std::max(err, std::abs(back.coeff(k) - c));
    for (const auto& [k, c] : back.coeffs()) err = std::max(err, std::abs(f.coeff(k) - c));
    out.push_back(rec("round_trip", {{"case", i}, {"d", d}}, err, 1e-12, err <= 1e-12));
  }
  return out;
}

Records suite_partition(std::uint64_t seed) {
  Records out;
  constexpr int S = 9;
  constexpr Int K = 127;
  // table[s][k + K] = as_weight_1d(s, k)
  std::vector<std::vector<double>> table(S + 2, std::vector<double>(2 * K + 1));
  for (int s = 1; s <= S + 1; ++s)
    for (Int k = -K; k <= K; ++k) table[s][k + K] = as_weight_1d(s, k);

  double support_viol = 0.0;
  for (int s = 1; s <= S + 1; ++s)
    for (Int k = -K; k <= K; ++k)
      if (k != 0 && std::abs(block_of_1d(k) - s) > 1) support_viol = std::max(support_viol, std::abs(table[s][k + K]));
  out.push_back(rec("a_support", {{"S", S + 1}, {"kmax", K}}, support_viol, 0.0, support_viol == 0.0));

  double e1 = 0.0;
  for (Int k = -K; k <= K; ++k) {
    if (k == 0) continue;
    double acc = 0.0;
    for (int s = 1; s <= S; ++s) acc += as_weight(BlockIndex{s}, FreqIndex{k});
    e1 = std::max(e1, std::abs(acc - 1.0));
  }
  out.push_back(rec("partition", {{"d", 1}, {"S", S}, {"kmax", K}}, e1, 1e-12, e1 <= 1e-12));

  double e2 = 0.0;
  for (Int a = -K; a <= K; ++a)
    for (Int b = -K; b <= K; ++b) {
      if (a == 0 || b == 0) continue;
      double acc = 0.0;
      for (int s1 = 1; s1 <= S; ++s1)
        for (int s2 = 1; s2 <= S; ++s2) acc += as_weight(BlockIndex{s1, s2}, FreqIndex{a, b});
      e2 = std::max(e2, std::abs(acc - 1.0));
    }
  out.push_back(rec("partition", {{"d", 2}, {"S", S}, {"kmax", K}}, e2, 1e-12, e2 <= 1e-12));

  // d = 3 over the three candidate levels per coordinate; a_support shows the rest vanish
  double e3 = 0.0;
  std::vector<std::vector<int>> cand(2 * K + 1);
  for (Int k = -K; k <= K; ++k) {
    if (k == 0) continue;
    const int b = block_of_1d(k);
    for (int s = std::max(1, b - 1); s <= std::min(S, b + 1); ++s) cand[k + K].push_back(s);
  }
#pragma omp parallel for reduction(max : e3) schedule(static)
  for (Int a = -K; a <= K; ++a) {
    if (a == 0) continue;
    for (Int b = -K; b <= K; ++b) {
      if (b == 0) continue;
      for (Int c = -K; c <= K; ++c) {
        if (c == 0) continue;
        double acc = 0.0;
        for (int s1 : cand[a + K])
          for (int s2 : cand[b + K])
            for (int s3 : cand[c + K]) acc += table[s1][a + K] * table[s2][b + K] * table[s3][c + K];
        e3 = std::max(e3, std::abs(acc - 1.0));
      }
    }
  }
  out.push_back(rec("partition", {{"d", 3}, {"S", S}, {"kmax", K}}, e3, 1e-12, e3 <= 1e-12));

  // adjacency: A_s A_{s'} = 0 when ||s - s'||_inf > 1, d = 2
  double adj = 0.0;
  for (int s1 = 1; s1 <= 7; ++s1)
    for (int s2 = 1; s2 <= 7; ++s2)
      for (int t1 = 1; t1 <= 7; ++t1)
        for (int t2 = 1; t2 <= 7; ++t2) {
          if (std::max(std::abs(s1 - t1), std::abs(s2 - t2)) <= 1) continue;
          for (Int a = -K; a <= K; ++a) {
            if (a == 0) continue;
            const double wa = table[s1][a + K] * table[t1][a + K];
            if (wa == 0.0) continue;
            for (Int b = -K; b <= K; ++b) {
              if (b == 0) continue;
              adj = std::max(adj, std::abs(wa * table[s2][b + K] * table[t2][b + K]));
            }
          }
        }
  out.push_back(rec("adjacency", {{"d", 2}, {"S", 7}, {"kmax", K}}, adj, 0.0, adj == 0.0));

  // sum_s A_s f = f for random zero-mean f
  Lcg rng(seed);
  for (int i = 0; i < 10; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    const auto f = random_poly(rng.next(), random_region(rng, d, 7 - static_cast<int>(d), 0.8));
    SparseTrigPoly sum(d);
    for (const auto& s : a_support_blocks(f)) sum += apply_multiplier(f, MultiplierSpec::a_block(s));
    double err = 0.0;
    for (const auto& [k, c] : f.coeffs()) err = std::max(err, std::abs(sum.coeff(k) - c));
    for (const auto& [k, c] : sum.coeffs()) err = std::max(err, std::abs(f.coeff(k) - c));
    out.push_back(rec("multiplier_sum", {{"case", i}, {"d", d}}, err, 1e-12, err <= 1e-12));
  }
  return out;
}

Records suite_nikolskii(std::uint64_t seed) {
  Records out;
  Lcg rng(seed);
  const std::pair<double, double> pairs[] = {{1.0, 2.0}, {2.0, 4.0}};
  for (const auto& [q, p] : pairs) {
    for (int i = 0; i < 200; ++i) {
      const int level = uniform_int(rng, 3, 7);
      const auto t = random_poly(rng.next(), random_region(rng, 2, level, 0.6));
      auto box = t.bandwidth();
      const auto c = nikolskii_check(t, p, q, box);
      CheckRecord r = rec("nikolskii", {{"case", i}, {"q", q}, {"p", p}, {"box", box}}, c.lhs, c.rhs, c.pass);
      out.push_back(std::move(r));
    }
    // sharpness probe: tensor Dirichlet kernel
    for (Int m : {8, 32, 128}) {
      SparseTrigPoly t(2);
      for (Int a = -m; a <= m; ++a)
        for (Int b = -m; b <= m; ++b) t.set({a, b}, 1.0);
      const auto c = nikolskii_check(t, p, q, {m, m});
      out.push_back(rec("nikolskii_dirichlet", {{"m", m}, {"q", q}, {"p", p}}, c.lhs, c.rhs, c.pass));
    }
  }
  return out;
}

Records suite_bernstein(std::uint64_t seed) {
  Records out;
  const double r1 = 1.0, p = 2.0;
  const std::vector<double> r{r1, r1};
  std::vector<double> probe;
  for (int n = 4; n <= 12; ++n) {
    // d_{n-1} is the outermost shell inside Q^1_n
    const auto dn = dn_poly(n - 1, 2);
    const double ratio = weyl_derivative(dn, r, r).coeff_l2() / dn.coeff_l2();
    probe.push_back(ratio / std::exp2(n * r1));
    out.push_back(rec("bernstein_probe", {{"n", n}, {"p", p}, {"r1", r1}}, ratio, std::exp2(n * r1), true));
  }
  const double hi = *std::max_element(probe.begin(), probe.end());
  const double lo = *std::min_element(probe.begin(), probe.end());
  out.push_back(rec("bernstein_band", {{"n_lo", 4}, {"n_hi", 12}}, hi / lo, 3.0, hi / lo <= 3.0));

  Lcg rng(seed);
  for (int n = 4; n <= 12; ++n) {
    const auto region = cross_blocks(ones_cross(2, n));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto t = random_poly(rng.next(), region);
      worst = std::max(worst, bernstein_ratio(t, n, p, r1) / std::exp2(n * r1));
    }
    out.push_back(rec("bernstein_random", {{"n", n}, {"samples", 100}, {"band_hi", hi}}, worst,
                      hi * (1.0 + 1e-12), worst <= hi * (1.0 + 1e-12)));
  }
  // lowest block: ratio does not grow with n
  SparseTrigPoly low(2);
  for (const auto& k : rho_block(BlockIndex{1, 1})) low.set(k, 1.0);
  const double base = bernstein_ratio(low, 4, p, r1);
  const double far = bernstein_ratio(low, 12, p, r1);
  out.push_back(rec("bernstein_lowest_block", {{"n", {4, 12}}}, far, base, far == base));
  return out;
}

Records suite_lemma_a(std::uint64_t) {
  Records out;
  struct Case {
    const char* name;
    std::vector<double> r;
  };
  for (const Case& c : {Case{"gamma=(1,1)", {1.0, 1.0}}, Case{"gamma=(1,2)", {1.0, 2.0}}}) {
    const auto prof = make_profile(c.r);
    double hi = 0.0, lo = std::numeric_limits<double>::infinity(), prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int l = 5; l <= 24; ++l) {
      const double v = lemma_a_sum(1.0, prof, l);
      const double ratio = v / (std::exp2(-l) * std::pow(l, prof.nu - 1));
      hi = std::max(hi, ratio);
      lo = std::min(lo, ratio);
      monotone = monotone && v < prev;
      prev = v;
    }
    out.push_back(rec("lemma_a_band", {{"case", c.name}, {"beta", 1}, {"l", {5, 24}}}, hi / lo, 2.5, hi / lo <= 2.5));
    out.push_back(rec("lemma_a_monotone", {{"case", c.name}}, monotone ? 1.0 : 0.0, 1.0, monotone));
  }
  const auto one = make_profile({1.0});
  for (double beta : {0.5, 1.0, 2.0})
    for (double l : {1.0, 3.5, 10.0}) {
      const double v = lemma_a_sum(beta, one, l);
      const double exact = std::exp2(-beta * std::ceil(l)) / (1.0 - std::exp2(-beta));
      out.push_back(rec("lemma_a_d1", {{"beta", beta}, {"l", l}}, v, exact, std::abs(v - exact) <= 1e-10 * exact));
    }
  return out;
}

Records suite_lemma_b(std::uint64_t seed) {
  Records out;
  Lcg rng(seed);
  double hi = 0.0, lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const int level = uniform_int(rng, 3, 7);
    const auto f = random_poly(rng.next(), random_region(rng, 2, level, 0.6));
    const auto c = lemma_b_check(f, 2.0, 4.0);
    hi = std::max(hi, c.ratio);
    lo = std::min(lo, c.ratio);
    out.push_back(rec("lemma_b", {{"case", i}, {"p", 2}, {"q", 4}, {"bound", 256}}, c.lhs, c.rhs, c.pass));
  }
  out.push_back(rec("lemma_b_spread", {{"samples", 100}}, hi, lo, std::isfinite(hi) && lo > 0.0));
  SparseTrigPoly one(2);
  for (const auto& k : rho_block(BlockIndex{2, 3})) one.set(k, 1.0);
  const auto c = lemma_b_check(one, 2.0, 4.0);
  out.push_back(rec("lemma_b_single_block", {{"s", {2, 3}}}, c.lhs, c.rhs, c.pass));
  const auto z = lemma_b_check(SparseTrigPoly(2), 2.0, 4.0);
  out.push_back(rec("lemma_b_zero", nlohmann::json::object(), z.lhs, z.rhs, z.pass && z.lhs == 0.0));
  return out;
}

Records suite_dirichlet(std::uint64_t) {
  Records out;
  for (double q : {4.0 / 3.0, 2.0, 4.0}) {
    std::vector<std::pair<double, double>> pts;
    for (int e = 4; e <= 14; ++e) {
      const Int m = Int{1} << e;
      const double v = dirichlet_norm_1d(m, q);
      pts.emplace_back(static_cast<double>(m), v);
      if (q == 2.0) {
        const double exact = std::sqrt(2.0 * static_cast<double>(m) + 1.0);
        out.push_back(rec("dirichlet_parseval", {{"m", m}}, v, exact, std::abs(v - exact) <= 1e-10 * exact));
      }
    }
    const auto fit = power_fit(pts);
    out.push_back(rec("dirichlet_exponent", {{"q", q}, {"m", {16, 16384}}, {"residual", fit.residual}},
                      fit.exponent, 1.0 - 1.0 / q, std::abs(fit.exponent - (1.0 - 1.0 / q)) <= 0.03));
  }
  const double v1 = dirichlet_norm_1d(1, 2.0);
  out.push_back(rec("dirichlet_m1", {{"m", 1}, {"q", 2}}, v1, std::sqrt(3.0), std::abs(v1 - std::sqrt(3.0)) <= 1e-12));
  return out;
}

Records suite_nearbest(std::uint64_t seed) {
  Records out;
  Lcg rng(seed);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 2);
    const int level = uniform_int(rng, 3, d == 1 ? 9 : 6);
    const double q = i % 3 == 0 ? 4.0 : (i % 3 == 1 ? 2.0 : 1.5);
    const auto f = random_poly(rng.next(), random_region(rng, d, level + 2, 0.7));
    const auto cross = ones_cross(d, level);
    const double tail = fourier_tail_error(f, cross, q);
    const double best = best_error_block(f, cross, q);
    out.push_back(rec("best_equals_tail", {{"case", i}, {"d", d}, {"n", level}, {"q", q}}, best, tail,
                      std::abs(best - tail) <= 1e-12 * std::max(1.0, tail)));

    // any t in T(Q) does no better
    auto t = random_poly(rng.next(), cross_blocks(cross).empty() ? std::vector<BlockIndex>{} : cross_blocks(cross));
    const double other = bq1_norm(f - t, q, BlockMode::delta);
    out.push_back(rec("sandwich", {{"case", i}, {"q", q}}, tail, other, tail <= other * (1.0 + 1e-12)));

    const double lq = lq_error(f, cross, q);
    out.push_back(rec("lq_below_bq1", {{"case", i}, {"q", q}}, lq, tail, lq <= tail * (1.0 + 1e-12)));
  }
  // brute force on d = 1 instances with six coefficients, cross T(2^2)
  const CrossSpec cross = ones_cross(1, 3);
  for (int i = 0; i < 4; ++i) {
    SparseTrigPoly f(1);
    const Int ks[] = {1, -2, 3, 5, -9, 17};
    for (Int k : ks) f.set({k}, std::polar(0.5 + rng.uniform(), 6.283185307179586 * rng.uniform()));
    const double q = i % 2 ? 4.0 : 2.0;
    const double tail = fourier_tail_error(f, cross, q);
    const double brute = brute_force_block_error(f, cross, q);
    out.push_back(rec("brute_force", {{"case", i}, {"q", q}, {"coefficients", 6}}, brute, tail,
                      std::abs(brute - tail) <= 1e-6));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"parseval", "partition", "nikolskii", "bernstein",
                                              "lemma_a",  "lemma_b",   "dirichlet", "nearbest"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "parseval") return suite_parseval(seed);
  if (name == "partition") return suite_partition(seed);
  if (name == "nikolskii") return suite_nikolskii(seed);
  if (name == "bernstein") return suite_bernstein(seed);
  if (name == "lemma_a") return suite_lemma_a(seed);
  if (name == "lemma_b") return suite_lemma_b(seed);
  if (name == "dirichlet") return suite_dirichlet(seed);
  if (name == "nearbest") return suite_nearbest(seed);
  throw std::invalid_argument("unknown check suite '" + name + "'");
}

}  // namespace hcross
