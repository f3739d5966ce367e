#include "hcross/generator.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "hcross/kernels.hpp"

namespace hcross {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in '" + s + "'");
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in '" + s + "'");
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

class Args {
 public:
  Args(const GeneratorCall& call, std::initializer_list<const char*> allowed) : call_(call) {
    for (const auto& [k, v] : call.args) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw std::invalid_argument(call.name + ": unknown argument '" + k + "'");
    }
    if (!call.positional.empty() && call.name != "file")
      throw std::invalid_argument(call.name + ": arguments must be key=value");
  }

  bool has(const std::string& k) const { return call_.args.count(k) > 0; }

  double num(const std::string& k) const {
    if (!has(k)) throw std::invalid_argument(call_.name + ": missing argument '" + k + "'");
    return parse_number(call_.args.at(k));
  }
  double num(const std::string& k, double fallback) const { return has(k) ? num(k) : fallback; }

  int integer(const std::string& k) const {
    const double v = num(k);
    if (v != std::floor(v) || std::abs(v) > 1e9)
      throw std::invalid_argument(call_.name + ": '" + k + "' must be an integer");
    return static_cast<int>(v);
  }
  int integer(const std::string& k, int fallback) const { return has(k) ? integer(k) : fallback; }

  std::vector<double> list(const std::string& k) const {
    if (!has(k)) throw std::invalid_argument(call_.name + ": missing argument '" + k + "'");
    return parse_number_list(call_.args.at(k));
  }

  std::optional<int> level() const {
    if (!has("n")) return std::nullopt;
    return integer("n");
  }

 private:
  const GeneratorCall& call_;
};

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::vector<double> out;
  for (const auto& part : split_top(t)) out.push_back(parse_number(part));
  if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return out;
}

GeneratorCall parse_generator_call(const std::string& text) {
  const std::string t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')')
    throw std::invalid_argument("generator must look like name(args): '" + text + "'");
  GeneratorCall call;
  call.name = trim(t.substr(0, open));
  if (call.name.empty()) throw std::invalid_argument("generator name missing in '" + text + "'");
  for (const auto& part : split_top(t.substr(open + 1, t.size() - open - 2))) {
    if (part.empty()) throw std::invalid_argument("empty argument in '" + text + "'");
    const auto eq = part.find('=');
    if (eq == std::string::npos || call.name == "file") {
      call.positional.push_back(part);
      continue;
    }
    const std::string key = trim(part.substr(0, eq));
    if (call.args.count(key)) throw std::invalid_argument("argument '" + key + "' given twice");
    call.args[key] = trim(part.substr(eq + 1));
  }
  return call;
}

Generator make_generator(const std::string& text, const GeneratorContext& ctx) {
  const GeneratorCall call = parse_generator_call(text);
  Generator g;
  g.seed = ctx.seed;
  if (ctx.r) g.profile = make_profile(*ctx.r);
  const std::string& name = call.name;

  if (name == "bernoulli") {
    Args a(call, {"r", "alpha", "N"});
    const auto r = a.list("r");
    const auto alpha = a.has("alpha") ? a.list("alpha") : r;
    const double N = a.num("N");
    auto prof = make_profile(r);
    const CrossSpec region = make_cross(prof, CrossVariant::gamma, N);
    auto f = bernoulli_tensor(r, alpha, cross_blocks(region));
    if (f.empty()) throw std::invalid_argument("bernoulli: N leaves no blocks");
    g.profile = prof;
    g.make = [f = std::move(f)](int) -> Subject { return f; };
  } else if (name == "dn") {
    Args a(call, {"n", "d"});
    const auto fixed = a.level();
    const int d = a.integer("d", 2);
    if (d < 1) throw std::invalid_argument("dn: d must be >= 1");
    if (!g.profile) g.profile = make_profile(std::vector<double>(static_cast<std::size_t>(d), 1.0));
    g.make = [fixed, d](int n) -> Subject { return dn_poly(fixed.value_or(n), static_cast<std::size_t>(d)); };
  } else if (name == "g1") {
    Args a(call, {"n", "p", "r1", "d"});
    const auto fixed = a.level();
    const double p = a.num("p");
    const double r1 = a.num("r1");
    const int d = a.integer("d", 2);
    if (d < 1) throw std::invalid_argument("g1: d must be >= 1");
    auto prof = make_profile(std::vector<double>(static_cast<std::size_t>(d), r1));
    g.profile = prof;
    g.make = [fixed, p, prof](int n) -> Subject { return g1_poly(fixed.value_or(n), p, prof).g; };
  } else if (name == "tail2") {
    Args a(call, {"n", "depth"});
    if (!g.profile) throw std::invalid_argument("tail2 needs a smoothness vector (--r)");
    const auto fixed = a.level();
    const int depth = a.integer("depth", 1);
    const auto prof = *g.profile;
    g.make = [fixed, depth, prof](int n) -> Subject {
      const CrossSpec spec = make_cross(prof, CrossVariant::gamma_prime, fixed.value_or(n));
      return tail_extremal_l2(prof, spec, depth).f;
    };
  } else if (name == "rand") {
    Args a(call, {"seed", "n", "depth", "d"});
    const auto fixed = a.level();
    const int depth = a.integer("depth", 2);
    const int d = a.integer("d", 2);
    if (d < 1) throw std::invalid_argument("rand: d must be >= 1");
    const double s = a.num("seed", static_cast<double>(ctx.seed));
    if (s < 0 || s != std::floor(s)) throw std::invalid_argument("rand: seed must be a nonnegative integer");
    const auto seed = static_cast<std::uint64_t>(s);
    g.seed = seed;
    if (!g.profile) g.profile = make_profile(std::vector<double>(static_cast<std::size_t>(d), 1.0));
    g.make = [fixed, depth, d, seed](int n) -> Subject {
      const auto region = cross_blocks(ones_cross(static_cast<std::size_t>(d), fixed.value_or(n) + depth));
      if (region.empty()) throw std::invalid_argument("rand: empty region");
      return random_poly(seed, region);
    };
  } else if (name == "w1") {
    Args a(call, {"r", "alpha", "L"});
    const auto r = a.list("r");
    const auto alpha = a.has("alpha") ? a.list("alpha") : r;
    const double L = a.num("L", 262144.0);
    if (L < 1 || L != std::floor(L)) throw std::invalid_argument("w1: L must be a positive integer");
    auto f = w1_representative(r, alpha, static_cast<Int>(L));
    g.profile = make_profile(r);
    g.make = [f = std::move(f)](int) -> Subject { return f; };
  } else if (name == "file") {
    if (call.positional.size() != 1) throw std::invalid_argument("file(path) takes one path");
    auto f = read_coefficients_file(call.positional.front());
    if (!g.profile) g.profile = make_profile(std::vector<double>(f.dim(), 1.0));
    g.make = [f = std::move(f)](int) -> Subject { return f; };
  } else {
    throw std::invalid_argument("unknown generator '" + name + "'");
  }
  return g;
}

}  // namespace hcross
