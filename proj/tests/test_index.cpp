#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hcross/index.hpp"

using namespace hcross;

TEST_CASE("block_of puts k in the dyadic shell") {
  CHECK(block_of_1d(1) == 1);
  CHECK(block_of_1d(-1) == 1);
  CHECK(block_of_1d(2) == 2);
  CHECK(block_of_1d(3) == 2);
  CHECK(block_of_1d(-4) == 3);
  CHECK(block_of_1d(7) == 3);
  CHECK(block_of_1d(8) == 4);
  CHECK(block_of(FreqIndex{5, -1}) == BlockIndex{3, 1});
  CHECK_THROWS_AS(block_of(FreqIndex{0, 3}), std::invalid_argument);
}

TEST_CASE("BlockIndex rejects s_j < 1") {
  CHECK_THROWS_AS(BlockIndex({0, 2}), std::invalid_argument);
  CHECK(BlockIndex{2, 3}.l1() == 5);
}

TEST_CASE("rho_block enumerates the block") {
  const auto ks = rho_block(BlockIndex{2});
  REQUIRE(ks.size() == 4);
  CHECK(ks[0] == FreqIndex{-3});
  CHECK(ks[3] == FreqIndex{3});
  for (const auto& s : box_blocks(3, 3)) {
    const auto all = rho_block(s);
    CHECK(all.size() == rho_cardinality(s));
    for (const auto& k : all) CHECK(block_of(k) == s);
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  CHECK(rho_cardinality(BlockIndex{3, 2}) == 8 * 4);
}

TEST_CASE("profile weights") {
  const auto p = make_profile({2.0, 1.0, 1.0});
  CHECK(p.r == std::vector<double>{1.0, 1.0, 2.0});
  CHECK(p.nu == 2);
  CHECK(p.gamma == std::vector<double>{1.0, 1.0, 2.0});
  CHECK(p.gamma_prime[2] == doctest::Approx(1.5));
  CHECK(p.gamma_prime[0] == 1.0);

  const auto q = make_profile({1.0, 2.0}, GammaPrimeRule{0.25, std::nullopt});
  CHECK(q.gamma_prime[1] == doctest::Approx(1.25));
  const auto v = make_profile({1.0, 3.0}, GammaPrimeRule{0.5, std::vector<double>{2.0}});
  CHECK(v.gamma_prime[1] == 2.0);
  CHECK_THROWS(make_profile({1.0, 3.0}, GammaPrimeRule{0.5, std::vector<double>{3.0}}));
  CHECK_THROWS(make_profile({}));
  CHECK_THROWS(make_profile({-1.0}));
}

TEST_CASE("cross of level 4 in d = 2") {
  const auto q = ones_cross(2, 4);
  const auto blocks = cross_blocks(q);
  CHECK(blocks == std::vector<BlockIndex>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(cross_cardinality(q) == 20);
  CHECK(cross_blocks(ones_cross(2, 1)).empty());
  CHECK(cross_blocks(ones_cross(2, 2)).empty());
  CHECK(cross_cardinality(ones_cross(1, 4)) == 14);
}

TEST_CASE("cross comparison is strict") {
  const CrossSpec q{3.0, {1.0, 1.0}};
  CHECK_FALSE(q.contains(BlockIndex{1, 2}));
  CHECK(q.contains(BlockIndex{1, 1}));
  CHECK(q.contains_freq(FreqIndex{1, -1}));
  CHECK_FALSE(q.contains_freq(FreqIndex{0, 1}));
  CHECK_FALSE(q.contains_freq(FreqIndex{2, 1}));
}

TEST_CASE("anisotropic cross variants") {
  const auto p = make_profile({1.0, 2.0});
  const auto g = make_cross(p, CrossVariant::gamma, 6);
  CHECK(g.weights == std::vector<double>{1.0, 2.0});
  const auto gp = make_cross(p, CrossVariant::gamma_prime, 6);
  CHECK(gp.weights[1] == doctest::Approx(1.5));
  for (const auto& s : cross_blocks(g)) CHECK(s[0] + 2 * s[1] < 6);
  CHECK(parse_cross_variant("gamma_prime") == CrossVariant::gamma_prime);
  CHECK(to_string(CrossVariant::ones) == "ones");
  CHECK_THROWS_AS(parse_cross_variant("delta"), std::invalid_argument);
}

TEST_CASE("shell_blocks splits the cross") {
  const std::vector<double> w{1.0, 1.5};
  std::set<BlockIndex> got;
  for (int t = 0; t < 10; ++t)
    for (const auto& s : shell_blocks(w, t, t + 1)) CHECK(got.insert(s).second);
  const auto all = cross_blocks(CrossSpec{10.0, w});
  CHECK(got == std::set<BlockIndex>(all.begin(), all.end()));
}

TEST_CASE("cross cardinality grows like 2^n n^{d-1}") {
  // |Q^1_n| in d = 2 is sum_{m=2}^{n-1} (m-1) 2^m
  for (int n = 2; n <= 12; ++n) {
    std::uint64_t expect = 0;
    for (int m = 2; m < n; ++m) expect += static_cast<std::uint64_t>(m - 1) << m;
    CHECK(cross_cardinality(ones_cross(2, n)) == expect);
  }
}
