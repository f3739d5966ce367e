#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hcross/approx.hpp"
#include "hcross/kernels.hpp"
#include "hcross/norms.hpp"

using namespace hcross;

namespace {

SparseTrigPoly sample_poly(std::uint64_t seed, std::size_t d, int level) {
  return random_poly(seed, cross_blocks(ones_cross(d, level)));
}

SparseTrigPoly separable_to_sparse(const SeparableFunction& f) {
  SparseTrigPoly out(2);
  const auto& a = f.factors[0];
  const auto& b = f.factors[1];
  for (Int i = a.lo; i <= a.hi(); ++i)
    for (Int j = b.lo; j <= b.hi(); ++j)
      if (i != 0 && j != 0) out.set({i, j}, a.at(i) * b.at(j));
  return out;
}

}  // namespace

TEST_CASE("space spec parsing") {
  const auto b = SpaceSpec::parse("bq1:4");
  CHECK(b.kind == SpaceSpec::Kind::bq1);
  CHECK(b.q == 4.0);
  CHECK(SpaceSpec::parse("lq:1.5").to_string() == "lq:1.5");
  CHECK(SpaceSpec::parse("b11").kind == SpaceSpec::Kind::b11);
  CHECK_THROWS(SpaceSpec::parse("bq1:1"));
  CHECK_THROWS(SpaceSpec::parse("hq:2"));
  CHECK_THROWS(SpaceSpec::parse("lq:"));
}

TEST_CASE("best block error is the Fourier tail") {
  for (int i = 0; i < 5; ++i) {
    const auto f = sample_poly(40 + i, 2, 8);
    const auto q = ones_cross(2, 5 + i % 3);
    for (double p : {1.5, 2.0, 4.0})
      CHECK(best_error_block(f, q, p) == doctest::Approx(fourier_tail_error(f, q, p)).epsilon(1e-12));
  }
}

TEST_CASE("f already in T(Q) has zero error") {
  const auto q = ones_cross(2, 6);
  const auto f = random_poly(8, cross_blocks(q));
  CHECK(fourier_tail_error(f, q, 2.0) == 0.0);
  CHECK(lq_error(f, q, 3.0) == 0.0);
}

TEST_CASE("single tail block") {
  SparseTrigPoly f(2);
  for (const auto& k : rho_block(BlockIndex{3, 3})) f.set(k, 1.0);
  const auto q = ones_cross(2, 6);
  CHECK(fourier_tail_error(f, q, 3.0) == doctest::Approx(lp_norm(f, 3.0)));
}

TEST_CASE("tensor and sparse tail errors agree") {
  const auto t = bernoulli_tensor({1.0, 1.0}, {1.0, 1.0}, cross_blocks(ones_cross(2, 9)));
  const auto s = to_sparse(t);
  const auto q = ones_cross(2, 6);
  for (double p : {2.0, 3.0, 4.0}) {
    CHECK(fourier_tail_error(t, q, p) == doctest::Approx(fourier_tail_error(s, q, p)).epsilon(1e-9));
    CHECK(lq_error(t, q, p) == doctest::Approx(lq_error(s, q, p)).epsilon(1e-9));
  }
}

TEST_CASE("Vallee Poussin approximant stays in the cross") {
  const auto prof = make_profile({1.0, 1.0});
  const auto f = sample_poly(3, 2, 12);
  const auto q = make_cross(prof, CrossVariant::gamma, 8);
  const auto t = vp_approximant(f, q);
  for (const auto& [k, c] : t.coeffs()) CHECK(q.contains_freq(k));
  CHECK_THROWS(vp_approximant(f, ones_cross(2, 6)));
  // the inner blocks are reproduced exactly
  for (const auto& [k, c] : f.coeffs())
    if (ones_cross(2, 4).contains_freq(k)) CHECK(std::abs(t.coeff(k) - c) < 1e-15);
}

TEST_CASE("lower bounds sit below the errors") {
  const auto f = sample_poly(77, 2, 9);
  const auto q = ones_cross(2, 7);
  const auto r = evaluate_errors(Subject{f}, q, SpaceSpec::parse("b11"));
  CHECK(r.value_E_lower <= r.value_EE);
  CHECK(r.value_E_lower <= r.value_E_upper);
  CHECK(r.value_E_lower > 0.0);
  const auto l = evaluate_errors(Subject{f}, q, SpaceSpec::parse("lq:4"));
  CHECK(l.value_E_lower <= l.value_EE * (1.0 + 1e-12));
  const auto l1 = evaluate_errors(Subject{f}, q, SpaceSpec::parse("lq:1.5"));
  CHECK(l1.value_E_lower <= l1.value_EE * (1.0 + 1e-12));
  const auto b = evaluate_errors(Subject{f}, q, SpaceSpec::parse("bq1:4"));
  CHECK(b.value_EE == b.value_E_lower);
  CHECK(b.value_EE == b.value_E_upper);
  CHECK(l.value_EE <= b.value_EE);
  CHECK(b.cardinality == cross_cardinality(q));
}

TEST_CASE("separable B11 errors match the dense evaluation") {
  const auto w = w1_representative({1.0, 1.0}, {1.0, 1.0}, 40);
  const auto s = separable_to_sparse(w);
  const auto q = ones_cross(2, 8);
  const auto sep = separable_b11_errors(w, q, 4.0);
  const auto dense = evaluate_errors(Subject{s}, q, SpaceSpec::parse("b11"), 4.0);
  CHECK(sep.fourier == doctest::Approx(dense.value_EE).epsilon(1e-9));
  CHECK(sep.vp == doctest::Approx(dense.value_E_upper).epsilon(1e-9));
  CHECK(sep.lower == doctest::Approx(dense.value_E_lower).epsilon(1e-9));
  CHECK_THROWS(evaluate_errors(Subject{w}, q, SpaceSpec::parse("bq1:2")));
}

TEST_CASE("sweep rows are ordered and reproducible") {
  SweepConfig cfg;
  cfg.profile = make_profile({1.0, 1.0});
  cfg.make = [](int n) -> Subject { return random_poly(5, cross_blocks(ones_cross(2, n + 2))); };
  cfg.space = SpaceSpec::parse("bq1:2");
  cfg.n_lo = 4;
  cfg.n_hi = 9;
  cfg.seed = 5;
  const auto rows = error_sweep(cfg);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].n == 4 + static_cast<int>(i));
  std::ostringstream a, b;
  write_sweep_csv(a, rows);
  write_sweep_csv(b, error_sweep(cfg));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("n,cardinality,value_EE,value_E_upper,value_E_lower,space,cross_variant,seed\n", 0) == 0);

  cfg.make = [](int n) -> Subject {
    if (n == 6) throw std::runtime_error("boom");
    return SparseTrigPoly(2);
  };
  CHECK_THROWS_WITH(error_sweep(cfg), "boom");
}
