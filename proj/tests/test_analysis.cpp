#include <doctest.h>

#include <cmath>

#include "hcross/analysis.hpp"
#include "hcross/kernels.hpp"

using namespace hcross;

TEST_CASE("rate fit recovers a synthetic law") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 4; n <= 16; ++n) pts.emplace_back(n, 3.0 * std::exp2(-1.25 * n) * std::pow(n, 0.7));
  const auto f = rate_fit(pts);
  CHECK(f.a == doctest::Approx(1.25).epsilon(1e-10));
  CHECK(f.b == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(f.log2C == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
  CHECK(f.residual < 1e-10);

  std::vector<std::pair<double, double>> pure;
  for (int n = 1; n <= 8; ++n) pure.emplace_back(n, std::exp2(-n));
  const auto g = rate_fit(pure);
  CHECK(g.a == doctest::Approx(1.0));
  CHECK(std::abs(g.b) < 1e-9);
}

TEST_CASE("rate fit errors") {
  CHECK_THROWS(rate_fit({{1, 1.0}, {2, 0.5}, {3, 0.25}}));
  CHECK_THROWS(rate_fit({{1, 1.0}, {2, 0.5}, {3, 0.0}, {4, 0.1}}));
  CHECK_THROWS(rate_fit({{2, 1.0}, {2, 0.5}, {2, 0.2}, {2, 0.1}}));
}

TEST_CASE("fit window drops the two smallest n") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 10; n >= 4; --n) pts.emplace_back(n, 1.0);
  const auto w = fit_window(pts);
  REQUIRE(w.size() == 5);
  CHECK(w.front().first == 6);
  pts.resize(5);
  CHECK(fit_window(pts).size() == 5);
}

TEST_CASE("power fit") {
  std::vector<std::pair<double, double>> pts;
  for (int e = 2; e <= 10; ++e) pts.emplace_back(std::exp2(e), 5.0 * std::pow(std::exp2(e), 0.25));
  CHECK(power_fit(pts).exponent == doctest::Approx(0.25));
}

TEST_CASE("theorem table") {
  RateCase c;
  c.profile = make_profile({1.0, 1.0});
  c.id = Theorem::T1;
  auto r = theory_rate(c);
  CHECK(r.a == 1.0);
  CHECK(r.b == 0.5);

  c.id = Theorem::T3;
  c.q = 4.0;
  r = theory_rate(c);
  CHECK(r.a == 0.75);
  CHECK(r.b == 0.5);

  c.id = Theorem::T2;
  c.p = c.q = 1.0;
  r = theory_rate(c);
  CHECK(r.a == 1.0);
  CHECK(r.b == 1.0);

  c.id = Theorem::T4;
  c.p = 4.0;
  c.q = 2.0;
  CHECK(theory_rate(c).b == 0.5);

  c.id = Theorem::Remark1;
  c.profile = make_profile({1.0, 1.0, 2.0});
  c.p = c.q = 4.0;
  r = theory_rate(c);
  CHECK(r.b == doctest::Approx(2.0 * 0.75));
  c.id = Theorem::T1;
  CHECK(theory_rate(c).b == doctest::Approx(0.75));

  c.id = Theorem::D;
  c.p = 2.0;
  c.q = 3.0;
  r = theory_rate(c);
  CHECK(r.a == doctest::Approx(1.0 - 0.5 + 1.0 / 3.0));
  CHECK(r.b == 0.0);
}

TEST_CASE("theorem hypotheses are enforced") {
  RateCase c;
  c.profile = make_profile({1.0, 1.0});
  c.id = Theorem::T3;
  c.p = 1.5;
  c.q = 4.0;
  CHECK_THROWS_AS(theory_rate(c), std::domain_error);
  c.id = Theorem::T1d1;
  c.p = c.q = 2.0;
  CHECK_THROWS_AS(theory_rate(c), std::domain_error);
  c.id = Theorem::T3;
  c.profile = make_profile({0.1, 0.1});
  c.p = 2.0;
  CHECK_THROWS_AS(theory_rate(c), std::domain_error);
  c.id = Theorem::T2;
  c.profile = make_profile({1.0, 1.0});
  c.p = c.q = 2.0;
  CHECK_THROWS_AS(theory_rate(c), std::domain_error);
  CHECK(parse_theorem("E1dim") == Theorem::E1dim);
  CHECK(to_string(Theorem::Remark2) == "Remark2");
  CHECK_THROWS_AS(parse_theorem("T9"), std::invalid_argument);
}

TEST_CASE("Lemma A sum") {
  const auto one = make_profile({1.0});
  CHECK(lemma_a_sum(1.0, one, 3.0) == doctest::Approx(0.25).epsilon(1e-11));
  // d = 2, gamma = (1,1): sum_{m >= l} (m-1) 2^{-m} = 2 l 2^{-l}
  const auto two = make_profile({1.0, 1.0});
  for (int l = 3; l <= 12; ++l)
    CHECK(lemma_a_sum(1.0, two, l) == doctest::Approx(2.0 * l * std::exp2(-l)).epsilon(1e-10));
  CHECK_THROWS(lemma_a_sum(0.0, two, 4));
}

TEST_CASE("Nikolskii inequality on a sample") {
  const auto t = random_poly(3, cross_blocks(ones_cross(2, 6)));
  const auto c = nikolskii_check(t, 4.0, 2.0, t.bandwidth());
  CHECK(c.pass);
  CHECK(c.ratio <= 1.0);
  CHECK_THROWS(nikolskii_check(t, 4.0, 2.0, {2, 2}));
  CHECK_THROWS(nikolskii_check(t, 2.0, 4.0, t.bandwidth()));
}

TEST_CASE("Bernstein ratio at p = 2") {
  SparseTrigPoly e(2);
  e.set({3, -2}, 1.0);
  CHECK(bernstein_ratio(e, 5, 2.0, 1.0) == doctest::Approx(6.0));
  CHECK_THROWS(bernstein_ratio(e, 4, 2.0, 1.0));
  CHECK_THROWS(bernstein_ratio(SparseTrigPoly(2), 4, 2.0, 1.0));
}

TEST_CASE("Lemma B on one block and zero") {
  SparseTrigPoly one(2);
  for (const auto& k : rho_block(BlockIndex{2, 2})) one.set(k, 1.0);
  const auto c = lemma_b_check(one, 2.0, 4.0);
  CHECK(c.pass);
  CHECK(lemma_b_check(SparseTrigPoly(2), 2.0, 4.0).lhs == 0.0);
}

TEST_CASE("Dirichlet kernel norms") {
  CHECK(dirichlet_norm_1d(1, 2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(dirichlet_norm_1d(100, 2.0) == doctest::Approx(std::sqrt(201.0)).epsilon(1e-12));
  CHECK(dirichlet_norm_1d(64, 4.0) > dirichlet_norm_1d(32, 4.0));
  CHECK_THROWS(dirichlet_norm_1d(0, 2.0));
}

TEST_CASE("brute force oracle matches the tail") {
  SparseTrigPoly f(1);
  f.set({1}, Complex(0.3, 0.4));
  f.set({-3}, 1.0);
  f.set({5}, Complex(0.0, -0.5));
  const auto q = ones_cross(1, 3);
  CHECK(std::abs(brute_force_block_error(f, q, 2.0) - 0.5) < 1e-6);
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 8);
  CHECK_THROWS_AS(run_suite("nope", 1), std::invalid_argument);
  const auto recs = run_suite("lemma_a", 1);
  for (const auto& r : recs) CHECK_MESSAGE(r.pass, r.check);
  const auto j = to_json(recs.front());
  CHECK(j.contains("params"));
  CHECK(j["pass"].get<bool>());
}
