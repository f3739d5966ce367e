#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hcross/fft.hpp"
#include "hcross/kernels.hpp"
#include "hcross/norms.hpp"
#include "hcross/tensor.hpp"
#include "hcross/trigpoly.hpp"

using namespace hcross;

namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SparseTrigPoly sample_poly(std::uint64_t seed, std::size_t d, int level) {
  return random_poly(seed, cross_blocks(ones_cross(d, level)));
}

}  // namespace

TEST_CASE("set drops tiny values and checks dimension") {
  SparseTrigPoly f(2);
  f.set({1, 1}, 1e-301);
  CHECK(f.empty());
  f.set({1, 1}, 2.0);
  f.add({1, 1}, -2.0);
  CHECK(f.empty());
  CHECK_THROWS_AS(f.set({1}, 1.0), std::invalid_argument);
}

TEST_CASE("zero_mean and bandwidth") {
  SparseTrigPoly f(2);
  f.set({3, -5}, 1.0);
  f.set({-1, 2}, 1.0);
  CHECK(f.zero_mean());
  CHECK(f.bandwidth() == std::vector<Int>{3, 5});
  f.set({0, 2}, 1.0);
  CHECK_FALSE(f.zero_mean());
}

TEST_CASE("quadrature grid sizes") {
  const auto g = QuadratureGrid::for_bandwidth({3, 10}, 8.0);
  CHECK(g.points == std::vector<std::int64_t>{64, 256});
  CHECK(g.total() == 64 * 256);
  CHECK(g.covers({3, 10}));
  CHECK_FALSE(QuadratureGrid{{4, 4}, 1.0}.covers({2, 2}));
  CHECK_THROWS(QuadratureGrid::for_bandwidth({3}, 0.5));
  CHECK(next_pow2(1.0) == 1);
  CHECK(next_pow2(17.0) == 32);
  CHECK(next_pow2(32.0) == 32);
}

TEST_CASE("FFT synthesis matches the direct sum") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto f = sample_poly(11 + d, d, 8 - static_cast<int>(d));
    const auto grid = QuadratureGrid::for_bandwidth(f.bandwidth(), 2.0);
    CHECK(max_diff(synthesize(f, grid), synthesize_reference(f, grid)) < 1e-11);
  }
}

TEST_CASE("1 + cos x has L2 norm sqrt(3/2)") {
  SparseTrigPoly f(1);
  f.set({0}, 1.0);
  f.set({1}, 0.5);
  f.set({-1}, 0.5);
  CHECK(lp_norm(f, 2.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
  CHECK(f.coeff_l2() == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
}

TEST_CASE("analyze inverts synthesize") {
  const auto f = sample_poly(5, 2, 6);
  const auto grid = QuadratureGrid::for_bandwidth(f.bandwidth(), 2.0);
  const auto back = analyze(synthesize(f, grid), grid, f.bandwidth(), 1e-12);
  REQUIRE(back.size() == f.size());
  for (const auto& [k, c] : f.coeffs()) CHECK(std::abs(back.coeff(k) - c) < 1e-12);
}

TEST_CASE("delta_block and support_blocks") {
  const auto f = sample_poly(3, 2, 5);
  double total = 0.0;
  for (const auto& s : support_blocks(f)) {
    const auto b = delta_block(f, s);
    for (const auto& [k, c] : b.coeffs()) CHECK(block_of(k) == s);
    total += std::pow(b.coeff_l2(), 2);
  }
  CHECK(total == doctest::Approx(std::pow(f.coeff_l2(), 2)).epsilon(1e-14));
  CHECK(support_blocks(f) == cross_blocks(ones_cross(2, 5)));
  SparseTrigPoly c(1);
  c.set({0}, 1.0);
  CHECK_THROWS(support_blocks(c));
}

TEST_CASE("restrict_to_cross keeps exactly the cross blocks") {
  const auto f = sample_poly(9, 2, 7);
  const auto q = ones_cross(2, 5);
  const auto s = restrict_to_cross(f, q);
  for (const auto& [k, c] : f.coeffs()) CHECK((s.coeff(k) == c) == q.contains_freq(k));
}

TEST_CASE("Weyl multiplier") {
  // (d/dx) e^{ikx} = ik e^{ikx}: r = 1, alpha = 1 gives |k| e^{i sign(k) pi/2}
  const auto m = weyl_multiplier(FreqIndex{3}, {1.0}, {1.0});
  CHECK(m.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(m.imag() == doctest::Approx(3.0));
  const auto n = weyl_multiplier(FreqIndex{-3}, {1.0}, {1.0});
  CHECK(n.imag() == doctest::Approx(-3.0));
  const auto z = weyl_multiplier(FreqIndex{-4, 2}, {0.5, 1.0}, {0.0, 0.0});
  CHECK(z.real() == doctest::Approx(4.0));
  SparseTrigPoly c(1);
  c.set({0}, 1.0);
  CHECK_THROWS(weyl_derivative(c, {1.0}, {1.0}));
}

TEST_CASE("convolution is the coefficient product") {
  SparseTrigPoly f(1), g(1);
  f.set({1}, 2.0);
  f.set({2}, 3.0);
  g.set({2}, Complex(0.0, 1.0));
  g.set({5}, 1.0);
  const auto h = convolve(f, g);
  CHECK(h.size() == 1);
  CHECK(h.coeff({2}) == Complex(0.0, 3.0));
}

TEST_CASE("coefficient file round trip") {
  const auto f = sample_poly(21, 3, 6);
  std::stringstream ss;
  write_coefficients(ss, f);
  const auto g = read_coefficients(ss);
  CHECK(g == f);
}

TEST_CASE("coefficient file errors") {
  std::stringstream empty_header("# nothing\n");
  CHECK_THROWS(read_coefficients(empty_header));
  std::stringstream dup("d=1\n1 1.0 0.0\n1 2.0 0.0\n");
  CHECK_THROWS(read_coefficients(dup));
  std::stringstream trailing("d=1\n1 1.0 0.0 9\n");
  CHECK_THROWS(read_coefficients(trailing));
  std::stringstream ok("# demo\nd=2\n\n1 -1 0.5 -0.25\n");
  const auto f = read_coefficients(ok);
  CHECK(f.coeff({1, -1}) == Complex(0.5, -0.25));
  CHECK_THROWS(read_coefficients_file("/nonexistent/coeffs.txt"));
}

TEST_CASE("tensor terms agree with their sparse expansion") {
  const auto t = dn_poly(5, 2);
  const auto s = to_sparse(t);
  CHECK(s.size() == 4 * 32);  // (n-1 choose d-1) 2^n
  CHECK(t.coeff_l2() == doctest::Approx(s.coeff_l2()));
  const auto dt = weyl_derivative(t, {1.0, 2.0}, {1.0, 0.0});
  const auto ds = weyl_derivative(s, {1.0, 2.0}, {1.0, 0.0});
  const auto dts = to_sparse(dt);
  for (const auto& [k, c] : ds.coeffs()) CHECK(std::abs(dts.coeff(k) - c) < 1e-9 * std::abs(c));
}

TEST_CASE("tensor blocks stay in their tag") {
  TensorBlockPoly t(1);
  RankOneTerm bad{BlockIndex{2}, 1.0, {Factor1D::block(3, [](Int) { return Complex{1.0}; })}};
  CHECK_THROWS(t.add_term(bad));
  t.add_term({BlockIndex{2}, 1.0, {Factor1D::block(2, [](Int) { return Complex{1.0}; })}});
  CHECK_THROWS(t.add_term({BlockIndex{2}, 1.0, {Factor1D::block(2, [](Int) { return Complex{1.0}; })}}));
  const auto f = Factor1D::block(2, [](Int k) { return Complex(static_cast<double>(k)); });
  CHECK(f.at(1) == Complex{0.0});
  CHECK(f.at(-3) == Complex{-3.0});
  CHECK(f.max_abs_freq() == 3);
}

TEST_CASE("restrict and complement partition a tensor") {
  const auto t = bernoulli_tensor({1.0, 1.0}, {0.0, 0.0}, cross_blocks(ones_cross(2, 7)));
  const auto q = ones_cross(2, 5);
  const auto in = restrict_to_cross(t, q);
  const auto out = cross_complement(t, q);
  CHECK(in.size() + out.size() == t.size());
  CHECK(std::pow(in.coeff_l2(), 2) + std::pow(out.coeff_l2(), 2) ==
        doctest::Approx(std::pow(t.coeff_l2(), 2)));
}
