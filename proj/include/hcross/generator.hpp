#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcross/approx.hpp"

namespace hcross {

/// `name(key=value, ...)`; values are numbers, `[a,b,...]` lists or bare words.
/// `file(path)` takes its path as the single positional argument.
struct GeneratorCall {
  std::string name;
  std::map<std::string, std::string> args;
  std::vector<std::string> positional;
};

GeneratorCall parse_generator_call(const std::string& text);

struct GeneratorContext {
  std::optional<std::vector<double>> r;  // --r from the command line
  std::uint64_t seed = 0;
};

struct Generator {
  std::function<Subject(int n)> make;
  /// Smoothness implied by the generator, or taken from the context.
  std::optional<SmoothnessProfile> profile;
  std::uint64_t seed = 0;
};

/// Generators: bernoulli(r=[..],alpha=[..],N=..), dn(n=..,d=..),
/// g1(n=..,p=..,r1=..,d=..), tail2(n=..,depth=..), rand(seed=..,n=..,depth=..,d=..),
/// w1(r=[..],alpha=[..],L=..), file(path). An omitted n follows the sweep level.
Generator make_generator(const std::string& text, const GeneratorContext& ctx = {});

std::vector<double> parse_number_list(const std::string& text);

}  // namespace hcross
