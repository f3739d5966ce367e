#include "hcross/approx.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "hcross/fft.hpp"
#include "hcross/grid_kernels.hpp"
#include "hcross/norms.hpp"

namespace hcross {

namespace {

std::string fmt_g(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void require_q_delta(double q) {
  if (!(q > 1.0) || !std::isfinite(q))
    throw std::invalid_argument("delta-block B_{q,1} needs 1 < q < inf");
}

double weight_sum(const CrossSpec& c) {
  return std::accumulate(c.weights.begin(), c.weights.end(), 0.0);
}

}  // namespace

SpaceSpec SpaceSpec::parse(const std::string& text) {
  SpaceSpec s;
  if (text == "b11") {
    s.kind = Kind::b11;
    s.q = 1.0;
    return s;
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("space must be bq1:<q>, lq:<q> or b11, got '" + text + "'");
  const std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
  if (head == "bq1")
    s.kind = Kind::bq1;
  else if (head == "lq")
    s.kind = Kind::lq;
  else
    throw std::invalid_argument("unknown space '" + head + "'");
  std::size_t used = 0;
  try {
    s.q = std::stod(tail, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tail.size() || tail.empty())
    throw std::invalid_argument("bad exponent in space '" + text + "'");
  if (!(s.q >= 1.0) || !std::isfinite(s.q))
    throw std::invalid_argument("space exponent must lie in [1, inf)");
  if (s.kind == Kind::bq1) require_q_delta(s.q);
  return s;
}

std::string SpaceSpec::to_string() const {
  switch (kind) {
    case Kind::bq1:
      return "bq1:" + fmt_g(q);
    case Kind::lq:
      return "lq:" + fmt_g(q);
    case Kind::b11:
      return "b11";
  }
  return "?";
}

double fourier_tail_error(const SparseTrigPoly& f, const CrossSpec& cross, double q,
                          double oversampling) {
  require_q_delta(q);
  double acc = 0.0;
  for (const auto& s : support_blocks(f))
    if (!cross.contains(s)) acc += lp_norm(delta_block(f, s), q, oversampling);
  return acc;
}

double fourier_tail_error(const TensorBlockPoly& f, const CrossSpec& cross, double q,
                          double oversampling) {
  require_q_delta(q);
  std::vector<const RankOneTerm*> outside;
  for (const auto& t : f.terms())
    if (!cross.contains(t.tag)) outside.push_back(&t);
  std::sort(outside.begin(), outside.end(), [](auto* a, auto* b) { return a->tag < b->tag; });
  double acc = 0.0;
  for (auto* t : outside) acc += lp_norm_tensor(*t, q, oversampling);
  return acc;
}

double best_error_block(const SparseTrigPoly& f, const CrossSpec& cross, double q,
                        double oversampling) {
  require_q_delta(q);
  const SparseTrigPoly residual = f - restrict_to_cross(f, cross);
  return bq1_norm(residual, q, BlockMode::delta, oversampling);
}

double best_error_block(const TensorBlockPoly& f, const CrossSpec& cross, double q,
                        double oversampling) {
  require_q_delta(q);
  return bq1_norm(cross_complement(f, cross), q, oversampling);
}

std::vector<BlockIndex> vp_inner_blocks(const CrossSpec& cross) {
  return shell_blocks(cross.weights, -1.0, cross.level - weight_sum(cross));
}

namespace {

void check_vp_level(const CrossSpec& cross) {
  if (!(cross.level > 3.0 * weight_sum(cross)))
    throw std::invalid_argument("Vallee Poussin approximant needs n > 3 * sum of weights (n = " +
                                fmt_g(cross.level) + ")");
}

// blocks s with A_s possibly nonzero at k_j, per coordinate
std::vector<int> a_candidates(Int k) {
  const int b = block_of_1d(k);
  std::vector<int> out;
  for (int s = std::max(1, b - 1); s <= b + 1; ++s)
    if (as_weight_1d(s, k) != 0.0) out.push_back(s);
  return out;
}

}  // namespace

SparseTrigPoly vp_approximant(const SparseTrigPoly& f, const CrossSpec& cross) {
  if (cross.dim() != f.dim()) throw std::invalid_argument("cross dimension mismatch");
  check_vp_level(cross);
  if (!f.zero_mean()) throw std::invalid_argument("vp_approximant needs a zero-mean polynomial");
  const auto inner = vp_inner_blocks(cross);
  const std::set<BlockIndex> I(inner.begin(), inner.end());
  const std::size_t d = f.dim();

  SparseTrigPoly t(d);
  for (const auto& [k, c] : f.coeffs()) {
    std::vector<std::vector<int>> cand(d);
    for (std::size_t j = 0; j < d; ++j) cand[j] = a_candidates(k[j]);
    double w = 0.0;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<int> s(d);
      for (std::size_t j = 0; j < d; ++j) s[j] = cand[j][idx[j]];
      BlockIndex b(std::move(s));
      if (I.count(b)) w += as_weight(b, k);
      std::size_t j = d;
      bool done = true;
      while (j-- > 0) {
        if (++idx[j] < cand[j].size()) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (done) break;
    }
    if (w != 0.0) t.set(k, c * w);
  }
  for (const auto& [k, c] : t.coeffs())
    if (!cross.contains_freq(k))
      throw std::logic_error("vp_approximant left the cross at " + to_string(k));
  return t;
}

SparseTrigPoly vp_approximant(const SparseTrigPoly& f, double n, const SmoothnessProfile& profile) {
  return vp_approximant(f, make_cross(profile, CrossVariant::gamma_prime, n));
}

double lq_error(const SparseTrigPoly& f, const CrossSpec& cross, double q, double oversampling) {
  return lp_norm(f - restrict_to_cross(f, cross), q, oversampling);
}

double lq_error(const TensorBlockPoly& f, const CrossSpec& cross, double q, double oversampling) {
  return lp_norm(cross_complement(f, cross), q, oversampling);
}

double duality_lower_bound(const SparseTrigPoly& f, const CrossSpec& cross) {
  const SparseTrigPoly h = f - restrict_to_cross(f, cross);
  if (h.empty()) return 0.0;
  const double l2 = h.coeff_l2();
  return l2 * l2 / h.coeff_l1();
}

namespace {

// A_s applied in one coordinate, optionally times a second restriction:
// kind 0 none, 1 delta_b, 2 A_b.
Factor1D piece_factor(const Factor1D& phi, int s, int kind, int b) {
  const Int L = std::max(std::abs(phi.lo), std::abs(phi.hi()));
  const Int K = std::min((Int{1} << (s + 1)) - 1, L);
  Factor1D out;
  out.lo = -K;
  out.c.assign(static_cast<std::size_t>(2 * K + 1), Complex{});
  for (Int k = -K; k <= K; ++k) {
    if (k == 0) continue;
    double w = as_weight_1d(s, k);
    if (kind == 1) w *= block_of_1d(k) == b ? 1.0 : 0.0;
    if (kind == 2) w *= as_weight_1d(b, k);
    if (w != 0.0) out.c[static_cast<std::size_t>(k + K)] = w * phi.at(k);
  }
  return out;
}

struct Piece {
  Complex sign;
  int kind;  // 0 whole A_s f, 1 A_s delta_b f, 2 A_s A_b f
  std::vector<int> b;
};

class SeparableEvaluator {
 public:
  SeparableEvaluator(const SeparableFunction& f, double os) : f_(f), os_(os) {
    for (const auto& phi : f.factors) {
      const Int L = std::max(std::abs(phi.lo), std::abs(phi.hi()));
      if (L < 1) throw std::invalid_argument("separable factor has no nonzero frequency");
      smax_.push_back(block_of_1d(L));
    }
  }

  std::size_t dim() const { return f_.dim(); }
  int smax(std::size_t j) const { return smax_[j]; }

  // ||A_s f||_1 = prod_j ||A_{s_j} phi_j||_1
  double whole_norm(const std::vector<int>& s) {
    double v = 1.0;
    for (std::size_t j = 0; j < dim(); ++j) {
      auto key = std::make_pair(j, s[j]);
      auto it = norm1_.find(key);
      if (it == norm1_.end())
        it = norm1_.emplace(key, factor_lp_norm(piece_factor(f_.factors[j], s[j], 0, 0), 1.0, os_))
                 .first;
      v *= it->second;
    }
    return v;
  }

  double dense_norm(const std::vector<int>& s, const std::vector<Piece>& pieces) {
    kernels::TensorSamples ts;
    for (std::size_t j = 0; j < dim(); ++j) {
      const Int L = std::max(std::abs(f_.factors[j].lo), std::abs(f_.factors[j].hi()));
      const Int K = std::min((Int{1} << (s[j] + 1)) - 1, L);
      ts.extents.push_back(next_pow2(os_ * (2.0 * static_cast<double>(K) + 1.0)));
    }
    if (ts.points() > kMaxGridPoints)
      throw std::runtime_error("separable B_{1,1} block grid too large");
    for (const auto& p : pieces) {
      ts.weights.push_back(p.sign);
      std::vector<std::vector<Complex>> fs;
      for (std::size_t j = 0; j < dim(); ++j)
        fs.push_back(sample_factor(
            piece_factor(f_.factors[j], s[j], p.kind, p.kind ? p.b[j] : 0), ts.extents[j]));
      ts.factors.push_back(std::move(fs));
    }
    return kernels::tensor_sum_abs_pow(ts, 1.0) / static_cast<double>(ts.points());
  }

  // per-coordinate sum over rho(b) of |phi^|^e, e in {1, 2}
  double block_moment(std::size_t j, int b, int e) const {
    const Int lo = Int{1} << (b - 1), hi = (Int{1} << b) - 1;
    double acc = 0.0;
    for (Int k = lo; k <= hi; ++k) {
      const double a = std::abs(f_.factors[j].at(k)), c = std::abs(f_.factors[j].at(-k));
      acc += e == 1 ? a + c : a * a + c * c;
    }
    return acc;
  }

 private:
  const SeparableFunction& f_;
  double os_;
  std::vector<int> smax_;
  std::map<std::pair<std::size_t, int>, double> norm1_;
};

// neighbours b with ||b - s||_inf <= 1 and 1 <= b_j <= limit_j
std::vector<std::vector<int>> neighbours(const std::vector<int>& s, const std::vector<int>& limit) {
  const std::size_t d = s.size();
  std::vector<std::vector<int>> out;
  std::vector<int> off(d, -1);
  while (true) {
    std::vector<int> b(d);
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      b[j] = s[j] + off[j];
      ok = b[j] >= 1 && b[j] <= limit[j];
    }
    if (ok) out.push_back(std::move(b));
    std::size_t j = d;
    bool done = true;
    while (j-- > 0) {
      if (++off[j] <= 1) {
        done = false;
        break;
      }
      off[j] = -1;
    }
    if (done) break;
  }
  return out;
}

// sum over s of ||A_s(sum over pieces outside `inside`)||_1 where the pieces
// partition A_s f into neighbour contributions of the given kind
template <class Inside>
double split_error(SeparableEvaluator& ev, const std::vector<int>& limit_s,
                   const std::vector<int>& limit_b, int kind, Inside inside) {
  const std::size_t d = ev.dim();
  double total = 0.0;
  std::vector<int> s(d, 1);
  while (true) {
    std::vector<std::vector<int>> in, out;
    for (auto& b : neighbours(s, limit_b)) (inside(b) ? in : out).push_back(std::move(b));
    if (!out.empty()) {
      if (in.empty()) {
        total += ev.whole_norm(s);
      } else {
        std::vector<Piece> pieces;
        if (in.size() + 1 < out.size()) {
          pieces.push_back({1.0, 0, {}});
          for (auto& b : in) pieces.push_back({-1.0, kind, b});
        } else {
          for (auto& b : out) pieces.push_back({1.0, kind, b});
        }
        total += ev.dense_norm(s, pieces);
      }
    }
    std::size_t j = d;
    bool done = true;
    while (j-- > 0) {
      if (++s[j] <= limit_s[j]) {
        done = false;
        break;
      }
      s[j] = 1;
    }
    if (done) break;
  }
  return total;
}

}  // namespace

SeparableErrors separable_b11_errors(const SeparableFunction& f, const CrossSpec& cross,
                                     double oversampling) {
  const std::size_t d = f.dim();
  if (cross.dim() != d) throw std::invalid_argument("cross dimension mismatch");
  check_vp_level(cross);
  SeparableEvaluator ev(f, oversampling);

  std::vector<int> smax(d), smax1(d);
  for (std::size_t j = 0; j < d; ++j) {
    smax[j] = ev.smax(j);
    smax1[j] = smax[j] + 1;
  }

  SeparableErrors out;
  out.fourier = split_error(ev, smax1, smax, 1,
                            [&](const std::vector<int>& b) { return cross.contains(BlockIndex(b)); });

  const double inner_level = cross.level - weight_sum(cross);
  CrossSpec inner{inner_level, cross.weights};
  out.vp = split_error(ev, smax1, smax1, 2,
                       [&](const std::vector<int>& b) { return inner.contains(BlockIndex(b)); });

  double h2 = 0.0, h1 = 0.0;
  int top = *std::max_element(smax.begin(), smax.end());
  for (const auto& b : box_blocks(d, top)) {
    if (cross.contains(b)) continue;
    double m2 = 1.0, m1 = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] > smax[j]) {
        m1 = m2 = 0.0;
        break;
      }
      m2 *= ev.block_moment(j, b[j], 2);
      m1 *= ev.block_moment(j, b[j], 1);
    }
    h2 += m2;
    h1 += m1;
  }
  out.lower = h1 > 0.0 ? h2 / h1 : 0.0;
  return out;
}

namespace {

ErrorReport sparse_report(const SparseTrigPoly& f, const CrossSpec& cross, const SpaceSpec& space,
                          double os) {
  ErrorReport r;
  switch (space.kind) {
    case SpaceSpec::Kind::bq1: {
      const double e = best_error_block(f, cross, space.q, os);
      r.value_EE = fourier_tail_error(f, cross, space.q, os);
      r.value_E_upper = e;
      r.value_E_lower = e;
      break;
    }
    case SpaceSpec::Kind::lq: {
      const SparseTrigPoly h = f - restrict_to_cross(f, cross);
      r.value_EE = lp_norm(h, space.q, os);
      r.value_E_upper = r.value_EE;
      if (h.empty()) {
        r.value_E_lower = 0.0;
      } else if (space.q >= 2.0) {
        r.value_E_lower = h.coeff_l2();
      } else {
        const double l2 = h.coeff_l2();
        const double dual = space.q == 1.0 ? h.coeff_l1() : lp_norm(h, space.q / (space.q - 1.0), os);
        r.value_E_lower = l2 * l2 / dual;
      }
      break;
    }
    case SpaceSpec::Kind::b11: {
      const SparseTrigPoly h = f - restrict_to_cross(f, cross);
      r.value_EE = bq1_norm(h, 1.0, BlockMode::a_kernel, os);
      r.value_E_upper = bq1_norm(f - vp_approximant(f, cross), 1.0, BlockMode::a_kernel, os);
      r.value_E_lower = duality_lower_bound(f, cross);
      break;
    }
  }
  return r;
}

ErrorReport tensor_report(const TensorBlockPoly& f, const CrossSpec& cross, const SpaceSpec& space,
                          double os) {
  ErrorReport r;
  switch (space.kind) {
    case SpaceSpec::Kind::bq1: {
      const double e = best_error_block(f, cross, space.q, os);
      r.value_EE = fourier_tail_error(f, cross, space.q, os);
      r.value_E_upper = e;
      r.value_E_lower = e;
      return r;
    }
    case SpaceSpec::Kind::lq: {
      const TensorBlockPoly h = cross_complement(f, cross);
      r.value_EE = lp_norm(h, space.q, os);
      r.value_E_upper = r.value_EE;
      if (h.empty()) {
        r.value_E_lower = 0.0;
      } else if (space.q >= 2.0) {
        r.value_E_lower = h.coeff_l2();
      } else {
        const double l2 = h.coeff_l2();
        const double dual = space.q == 1.0 ? to_sparse(h).coeff_l1()
                                           : lp_norm(h, space.q / (space.q - 1.0), os);
        r.value_E_lower = l2 * l2 / dual;
      }
      return r;
    }
    case SpaceSpec::Kind::b11:
      return sparse_report(to_sparse(f), cross, space, os);
  }
  return r;
}

}  // namespace

ErrorReport evaluate_errors(const Subject& f, const CrossSpec& cross, const SpaceSpec& space,
                            double oversampling) {
  ErrorReport r = std::visit(
      [&](const auto& g) -> ErrorReport {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SparseTrigPoly>) {
          return sparse_report(g, cross, space, oversampling);
        } else if constexpr (std::is_same_v<T, TensorBlockPoly>) {
          return tensor_report(g, cross, space, oversampling);
        } else {
          if (space.kind != SpaceSpec::Kind::b11)
            throw std::invalid_argument("separable functions are only measured in b11");
          const auto e = separable_b11_errors(g, cross, std::min(oversampling, 4.0));
          ErrorReport rep;
          rep.value_EE = e.fourier;
          rep.value_E_upper = e.vp;
          rep.value_E_lower = e.lower;
          return rep;
        }
      },
      f);
  r.space = space;
  r.cross = cross;
  r.cardinality = cross_cardinality(cross);
  return r;
}

std::vector<ErrorReport> error_sweep(const SweepConfig& cfg) {
  if (!cfg.make) throw std::invalid_argument("sweep has no generator");
  std::vector<ErrorReport> rows;
  if (cfg.n_hi < cfg.n_lo) return rows;
  const int count = cfg.n_hi - cfg.n_lo + 1;
  rows.resize(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      const int n = cfg.n_lo + i;
      const CrossSpec cross = make_cross(cfg.profile, cfg.variant, n);
      ErrorReport r = evaluate_errors(cfg.make(n), cross, cfg.space, cfg.oversampling);
      r.n = n;
      r.variant = cfg.variant;
      r.seed = cfg.seed;
      rows[i] = std::move(r);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<ErrorReport>& rows) {
  out << "n,cardinality,value_EE,value_E_upper,value_E_lower,space,cross_variant,seed\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.cardinality << ',' << fmt_g(r.value_EE) << ','
        << fmt_g(r.value_E_upper) << ',' << fmt_g(r.value_E_lower) << ',' << r.space.to_string()
        << ',' << to_string(r.variant) << ',' << r.seed << '\n';
  }
}

}  // namespace hcross
