#include <doctest.h>

#include <cmath>
#include <limits>

#include "hcross/grid_kernels.hpp"
#include "hcross/kernels.hpp"
#include "hcross/norms.hpp"
#include "hcross/tensor.hpp"

using namespace hcross;

namespace {

SparseTrigPoly sample_poly(std::uint64_t seed, std::size_t d, int level) {
  return random_poly(seed, cross_blocks(ones_cross(d, level)));
}

}  // namespace

TEST_CASE("exponentials have unit norm") {
  SparseTrigPoly e(2);
  e.set({3, -7}, Complex(0.0, 1.0));
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 7.5}) CHECK(lp_norm(e, p) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Parseval on random polynomials") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto f = sample_poly(100 + d, d, 10 - 2 * static_cast<int>(d));
    const auto grid = QuadratureGrid::for_bandwidth(f.bandwidth(), 2.0);
    CHECK(lp_norm(f, 2.0, grid) == doctest::Approx(f.coeff_l2()).epsilon(1e-10));
  }
}

TEST_CASE("grid too small is rejected") {
  const auto f = sample_poly(1, 1, 5);
  CHECK_THROWS(lp_norm(f, 2.0, QuadratureGrid{{8}, 1.0}));
  CHECK_THROWS(lp_norm(f, 0.5));
}

TEST_CASE("serial reference equals the parallel path") {
  const auto f = sample_poly(7, 2, 7);
  const auto grid = QuadratureGrid::for_bandwidth(f.bandwidth(), 4.0);
  for (double p : {1.0, 3.0, 4.0})
    CHECK(lp_norm(f, p, grid) == doctest::Approx(lp_norm_reference(f, p, grid)).epsilon(1e-11));
}

TEST_CASE("grid kernels: parallel equals serial bit for bit") {
  std::vector<Complex> v(100003);
  Lcg g(5);
  for (auto& z : v) z = Complex(g.uniform() - 0.5, g.uniform() - 0.5);
  for (double p : {1.0, 2.0, 3.3, 4.0}) CHECK(kernels::sum_abs_pow(v, p) == kernels::sum_abs_pow_serial(v, p));

  kernels::TensorSamples t;
  t.extents = {64, 128};
  for (int term = 0; term < 3; ++term) {
    t.weights.emplace_back(g.uniform(), g.uniform());
    std::vector<std::vector<Complex>> fac;
    for (auto m : t.extents) {
      std::vector<Complex> f(static_cast<std::size_t>(m));
      for (auto& z : f) z = Complex(g.uniform(), g.uniform());
      fac.push_back(std::move(f));
    }
    t.factors.push_back(std::move(fac));
  }
  CHECK(t.points() == 64 * 128);
  for (double p : {1.0, 2.5}) CHECK(kernels::tensor_sum_abs_pow(t, p) == kernels::tensor_sum_abs_pow_serial(t, p));

  std::vector<std::vector<Complex>> rows(5, std::vector<Complex>(3000));
  for (auto& r : rows)
    for (auto& z : r) z = Complex(g.uniform(), g.uniform());
  const auto G = kernels::gram(rows);
  CHECK(G == kernels::gram_serial(rows));
  CHECK(G[1 * 5 + 2] == std::conj(G[2 * 5 + 1]));
  CHECK_THROWS(kernels::gram({std::vector<Complex>(3), std::vector<Complex>(4)}));
}

TEST_CASE("tensor fast path equals dense quadrature") {
  for (int n : {3, 4, 5, 6}) {
    const auto t = dn_poly(n, 2);
    const auto s = to_sparse(t);
    for (double p : {1.0, 3.0}) {
      for (const auto& term : t.terms()) {
        TensorBlockPoly one(2);
        one.add_term(term);
        CHECK(lp_norm_tensor(term, p) == doctest::Approx(lp_norm(to_sparse(one), p)).epsilon(1e-8));
      }
      CHECK(lp_norm(t, p) == doctest::Approx(lp_norm(s, p)).epsilon(1e-8));
    }
  }
}

TEST_CASE("moment method equals dense quadrature for even p") {
  const auto t = bernoulli_tensor({1.0, 1.0}, {1.0, 1.0}, cross_blocks(ones_cross(2, 7)));
  for (int m : {2, 3}) {
    const double dense = lp_norm_dense(t, 2.0 * m, 8.0);
    CHECK(lp_norm_moment(t, m) == doctest::Approx(dense).epsilon(1e-10));
    CHECK(lp_norm_moment(t, m, true) == doctest::Approx(dense).epsilon(1e-10));
  }
  CHECK(lp_norm(t, 2.0) == doctest::Approx(t.coeff_l2()).epsilon(1e-14));
}

TEST_CASE("B_{q,1} norm") {
  SparseTrigPoly one(2);
  for (const auto& k : rho_block(BlockIndex{2, 3})) one.set(k, 1.0);
  CHECK(bq1_norm(one, 3.0, BlockMode::delta) == doctest::Approx(lp_norm(one, 3.0)));
  CHECK_THROWS(bq1_norm(one, 1.0, BlockMode::delta));

  const auto f = sample_poly(12, 2, 6);
  for (double q : {1.5, 2.0, 4.0}) CHECK(lp_norm(f, q) <= bq1_norm(f, q, BlockMode::delta) * (1.0 + 1e-12));

  // d_n through the tensor path equals the sum of 1-D block norm products
  const auto d = dn_poly(6, 2);
  double expect = 0.0;
  for (const auto& term : d.terms())
    expect += factor_lp_norm(term.factors[0], 4.0) * factor_lp_norm(term.factors[1], 4.0);
  CHECK(bq1_norm(d, 4.0) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(bq1_norm(d, 4.0) == doctest::Approx(bq1_norm(to_sparse(d), 4.0, BlockMode::delta)).epsilon(1e-9));
}

TEST_CASE("A-mode block norm") {
  SparseTrigPoly e(1);
  e.set({1}, 1.0);
  // e^{ix} sits in A_1 only
  CHECK(bq1_norm(e, 1.0, BlockMode::a_kernel) == doctest::Approx(1.0));
  const auto f = sample_poly(4, 1, 6);
  CHECK(lp_norm(f, 1.0) <= bq1_norm(f, 1.0, BlockMode::a_kernel) * (1.0 + 1e-12));
}

TEST_CASE("Besov and H norms") {
  SparseTrigPoly one(2);
  for (const auto& k : rho_block(BlockIndex{2, 3})) one.set(k, 1.0);
  const std::vector<double> r{1.0, 0.5};
  const double base = std::exp2(2.0 * 1.0 + 3.0 * 0.5) * lp_norm(one, 3.0);
  CHECK(besov_norm(one, r, 3.0, 1.0) == doctest::Approx(base));
  CHECK(besov_norm(one, r, 3.0, std::numeric_limits<double>::infinity()) == doctest::Approx(base));
  CHECK(h_norm(one, r, 3.0) == doctest::Approx(base));

  const auto f = sample_poly(2, 2, 6);
  CHECK(besov_norm(f, r, 2.0, std::numeric_limits<double>::infinity()) <= besov_norm(f, r, 2.0, 2.0));
  CHECK(besov_norm(f, r, 2.0, 2.0) <= besov_norm(f, r, 2.0, 1.0));
}

TEST_CASE("NormSpec validation") {
  NormSpec s;
  s.kind = NormKind::besov;
  CHECK_THROWS(s.validate());
  s.r = std::vector<double>{1.0};
  CHECK_NOTHROW(s.validate());
  NormSpec b;
  b.kind = NormKind::bq1;
  b.p = 1.0;
  CHECK_THROWS(b.validate());
  b.mode = BlockMode::a_kernel;
  CHECK_NOTHROW(b.validate());
  CHECK(parse_block_mode("a_kernel") == BlockMode::a_kernel);
  CHECK_THROWS(parse_block_mode("x"));
}
