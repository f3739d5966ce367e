#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hcross/generator.hpp"
#include "hcross/kernels.hpp"

using namespace hcross;

TEST_CASE("generator call syntax") {
  const auto c = parse_generator_call("bernoulli(r=[1, 2], alpha=[0,0], N=9)");
  CHECK(c.name == "bernoulli");
  CHECK(c.args.at("r") == "[1, 2]");
  CHECK(c.args.at("N") == "9");
  CHECK(parse_number_list("[1, 2.5]") == std::vector<double>{1.0, 2.5});
  CHECK(parse_generator_call("file(/tmp/a=b.txt)").positional.front() == "/tmp/a=b.txt");
  CHECK_THROWS(parse_generator_call("dn"));
  CHECK_THROWS(parse_generator_call("dn(n=2,n=3)"));
  CHECK_THROWS(parse_generator_call("bernoulli(r=[1,2)"));
  CHECK_THROWS(make_generator("nothing(n=1)"));
  CHECK_THROWS(make_generator("dn(m=4)"));
  CHECK_THROWS(make_generator("g1(p=2)"));
  CHECK_THROWS(make_generator("tail2(depth=1)"));
}

TEST_CASE("dn generator follows n unless fixed") {
  const auto g = make_generator("dn(d=2)");
  CHECK(std::get<TensorBlockPoly>(g.make(4)).size() == 3);
  CHECK(std::get<TensorBlockPoly>(g.make(5)).size() == 4);
  const auto h = make_generator("dn(n=4)");
  CHECK(std::get<TensorBlockPoly>(h.make(9)).size() == 3);
}

TEST_CASE("bernoulli generator") {
  const auto g = make_generator("bernoulli(r=[1,2],alpha=[1,2],N=8)");
  REQUIRE(g.profile);
  CHECK(g.profile->r == std::vector<double>{1.0, 2.0});
  const auto t = std::get<TensorBlockPoly>(g.make(3));
  CHECK(t.size() == cross_blocks(CrossSpec{8.0, {1.0, 2.0}}).size());
}

TEST_CASE("rand generator is seeded") {
  const auto a = make_generator("rand(seed=4,n=3)");
  CHECK(a.seed == 4);
  const auto p = std::get<SparseTrigPoly>(a.make(0));
  CHECK(p == std::get<SparseTrigPoly>(make_generator("rand(seed=4,n=3)").make(7)));
  CHECK(p.size() == cross_cardinality(ones_cross(2, 5)));
}

TEST_CASE("tail2 and g1 generators") {
  GeneratorContext ctx;
  ctx.r = std::vector<double>{1.0, 2.0};
  const auto t = make_generator("tail2(depth=2)", ctx);
  CHECK_FALSE(std::get<TensorBlockPoly>(t.make(8)).empty());
  const auto g = make_generator("g1(p=2,r1=1)");
  CHECK(std::get<TensorBlockPoly>(g.make(6)).size() == 5);
}

TEST_CASE("file generator") {
  const std::string path = "generator_test_coeffs.txt";
  {
    std::ofstream f(path);
    f << "d=1\n1 1 0\n-1 1 0\n";
  }
  const auto g = make_generator("file(" + path + ")");
  CHECK(std::get<SparseTrigPoly>(g.make(3)).size() == 2);
  std::remove(path.c_str());
  CHECK_THROWS(make_generator("file(" + path + ")"));
}

TEST_CASE("w1 generator") {
  const auto g = make_generator("w1(r=[1,1],L=16)");
  CHECK(std::get<SeparableFunction>(g.make(1)).factors[0].c.size() == 33);
}
