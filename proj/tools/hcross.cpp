// hcross: command line front end for cross enumeration, error sweeps, rate
// fits and the inequality check suites.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hcross/analysis.hpp"
#include "hcross/approx.hpp"
#include "hcross/generator.hpp"
#include "hcross/norms.hpp"
#include "hcross/tensor.hpp"

using namespace hcross;
using nlohmann::json;

namespace {

// bad flag values; reported with exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json num12(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(fmt12(v));
}

template <class F>
auto usage(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<double> parse_weights(const std::string& text) {
  return usage("--weights", [&] {
    auto w = parse_number_list(text);
    for (double v : w)
      if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("weights must be positive");
    return w;
  });
}

std::pair<int, int> parse_range(const std::string& text) {
  return usage("--n-range", [&] {
    const auto colon = text.find(':');
    const auto dots = text.find("..");
    std::string a, b;
    if (dots != std::string::npos) {
      a = text.substr(0, dots);
      b = text.substr(dots + 2);
    } else if (colon != std::string::npos) {
      a = text.substr(0, colon);
      b = text.substr(colon + 1);
    } else {
      throw std::invalid_argument("expected lo..hi or lo:hi");
    }
    std::size_t used = 0;
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("bad lower end");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("bad upper end");
    if (hi < lo) throw std::invalid_argument("empty range");
    return std::pair{lo, hi};
  });
}

int cmd_cross(int d, double n, const std::string& weights_text) {
  std::vector<double> w = weights_text.empty() ? std::vector<double>(static_cast<std::size_t>(d), 1.0)
                                               : parse_weights(weights_text);
  if (static_cast<int>(w.size()) != d) throw UsageError("--weights: expected " + std::to_string(d) + " entries");
  const CrossSpec spec{n, w};
  const auto blocks = cross_blocks(spec);
  std::uint64_t total = 0;
  for (const auto& s : blocks) {
    const auto c = rho_cardinality(s);
    total += c;
    std::cout << to_string(s) << ' ' << c << '\n';
  }
  std::cout << "blocks " << blocks.size() << '\n' << "frequencies " << total << '\n';
  return 0;
}

struct SweepArgs {
  std::string gen, range, variant = "gamma", space = "bq1:2", r, out;
  std::uint64_t seed = 0;
  double oversampling = 8.0;
};

int cmd_sweep(const SweepArgs& a) {
  const auto [lo, hi] = parse_range(a.range);
  GeneratorContext ctx;
  ctx.seed = a.seed;
  if (!a.r.empty()) ctx.r = usage("--r", [&] { return parse_number_list(a.r); });
  const Generator g = usage("--gen", [&] { return make_generator(a.gen, ctx); });
  SweepConfig cfg;
  cfg.make = g.make;
  cfg.profile = *g.profile;
  cfg.variant = usage("--variant", [&] { return parse_cross_variant(a.variant); });
  cfg.space = usage("--space", [&] { return SpaceSpec::parse(a.space); });
  cfg.n_lo = lo;
  cfg.n_hi = hi;
  cfg.seed = g.seed;
  cfg.oversampling = a.oversampling;
  const auto rows = error_sweep(cfg);
  if (a.out.empty() || a.out == "-") {
    write_sweep_csv(std::cout, rows);
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    write_sweep_csv(f, rows);
    if (!f) throw std::runtime_error("write failed: " + a.out);
  }
  return 0;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

struct FitArgs {
  std::string csv, column = "value_EE", theorem, r;
  double p = 2.0, q = 2.0;
  bool all_points = false;
};

int cmd_fit(const FitArgs& a) {
  std::ifstream in(a.csv);
  if (!in) throw std::runtime_error("cannot read " + a.csv);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(a.csv + ": empty file");
  const auto header = split_csv_line(line);
  int col_n = -1, col_v = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "n") col_n = static_cast<int>(i);
    if (header[i] == a.column) col_v = static_cast<int>(i);
  }
  if (col_n < 0) throw std::runtime_error(a.csv + ": no 'n' column");
  if (col_v < 0) throw UsageError("--column: no column '" + a.column + "' in " + a.csv);
  std::vector<std::pair<double, double>> pts;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw std::runtime_error(a.csv + ":" + std::to_string(lineno) + ": wrong number of fields");
    pts.emplace_back(std::stod(cells[static_cast<std::size_t>(col_n)]),
                     std::stod(cells[static_cast<std::size_t>(col_v)]));
  }
  if (pts.size() < 4) throw std::runtime_error("fit needs at least 4 rows, got " + std::to_string(pts.size()));
  const auto used = a.all_points ? pts : fit_window(pts);
  const RateFit f = rate_fit(used);
  json out{{"column", a.column},
           {"a", num12(f.a)},
           {"b", num12(f.b)},
           {"log2C", num12(f.log2C)},
           {"residual", num12(f.residual)},
           {"points", f.points},
           {"n_min", num12(f.n_min)},
           {"n_max", num12(f.n_max)}};
  if (!a.theorem.empty()) {
    RateCase c;
    c.id = usage("--theorem", [&] { return parse_theorem(a.theorem); });
    if (a.r.empty()) throw UsageError("--r: required with --theorem");
    c.profile = usage("--r", [&] { return make_profile(parse_number_list(a.r)); });
    c.p = a.p;
    c.q = a.q;
    PredictedRate pr;
    try {
      pr = theory_rate(c);
    } catch (const std::domain_error& e) {
      throw UsageError(std::string("--theorem: ") + e.what());
    }
    out["theorem"] = a.theorem;
    out["predicted"] = {{"a", num12(pr.a)}, {"b", num12(pr.b)}};
    out["deviation"] = {{"a", num12(std::abs(f.a - pr.a))}, {"b", num12(std::abs(f.b - pr.b))}};
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_check(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw UsageError("suite: unknown suite '" + suite + "'");
    names = {suite};
  }
  json report = json::array();
  bool ok = true;
  for (const auto& name : names) {
    const auto recs = run_suite(name, seed);
    json checks = json::array();
    int passed = 0;
    for (const auto& r : recs) {
      json j = to_json(r);
      for (const char* k : {"lhs", "rhs", "ratio"})
        if (j[k].is_number()) j[k] = num12(j[k].get<double>());
      checks.push_back(std::move(j));
      passed += r.pass ? 1 : 0;
    }
    ok = ok && passed == static_cast<int>(recs.size());
    report.push_back({{"suite", name},
                      {"seed", seed},
                      {"passed", passed},
                      {"total", recs.size()},
                      {"checks", std::move(checks)}});
  }
  std::cout << (suite == "all" ? report : report[0]).dump(2) << '\n';
  return ok ? 0 : 1;
}

struct NormArgs {
  std::string file, kind = "lp", r, mode = "delta";
  double p = 2.0, theta = 1.0, oversampling = 8.0;
};

int cmd_norm(const NormArgs& a) {
  NormSpec spec;
  spec.kind = usage("--kind", [&] {
    if (a.kind == "lp") return NormKind::lp;
    if (a.kind == "bq1") return NormKind::bq1;
    if (a.kind == "besov") return NormKind::besov;
    if (a.kind == "h_sup") return NormKind::h_sup;
    throw std::invalid_argument("expected lp, bq1, besov or h_sup");
  });
  spec.p = a.p;
  spec.theta = a.theta;
  if (!a.r.empty()) spec.r = usage("--r", [&] { return parse_number_list(a.r); });
  spec.mode = usage("--mode", [&] { return parse_block_mode(a.mode); });
  usage("norm", [&] {
    spec.validate();
    return 0;
  });
  const auto f = read_coefficients_file(a.file);
  std::cout << fmt12(evaluate_norm(f, spec, a.oversampling)) << '\n';
  return 0;
}

int cmd_gen(const std::string& text, int n, const std::string& r, std::uint64_t seed,
            const std::string& out) {
  GeneratorContext ctx;
  ctx.seed = seed;
  if (!r.empty()) ctx.r = usage("--r", [&] { return parse_number_list(r); });
  const Generator g = usage("--gen", [&] { return make_generator(text, ctx); });
  const Subject s = g.make(n);
  SparseTrigPoly f(1);
  if (const auto* p = std::get_if<SparseTrigPoly>(&s)) {
    f = *p;
  } else if (const auto* t = std::get_if<TensorBlockPoly>(&s)) {
    f = to_sparse(*t);
  } else {
    throw UsageError("--gen: separable functions have no finite coefficient list");
  }
  if (out.empty() || out == "-") {
    write_coefficients(std::cout, f);
  } else {
    write_coefficients_file(out, f);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic cross approximation experiments"};
  app.require_subcommand(1);

  int cross_d = 2;
  double cross_n = 1.0;
  std::string cross_w;
  auto* cross = app.add_subcommand("cross", "list the blocks of a step hyperbolic cross");
  cross->add_option("--d", cross_d, "dimension")->check(CLI::PositiveNumber);
  cross->add_option("--n", cross_n, "level")->required();
  cross->add_option("--weights", cross_w, "comma separated weights (default all ones)");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "approximation errors over a range of levels, as CSV");
  sweep->add_option("--gen", sw.gen, "generator expression")->required();
  sweep->add_option("--n-range", sw.range, "lo..hi")->required();
  sweep->add_option("--variant", sw.variant, "gamma | gamma_prime | ones");
  sweep->add_option("--space", sw.space, "bq1:q | lq:q | b11");
  sweep->add_option("--r", sw.r, "smoothness vector");
  sweep->add_option("--seed", sw.seed, "seed recorded in the output");
  sweep->add_option("--oversampling", sw.oversampling, "quadrature oversampling")->check(CLI::Range(1.0, 64.0));
  sweep->add_option("--out", sw.out, "output CSV (default stdout)");

  FitArgs ft;
  auto* fit = app.add_subcommand("fit", "fit 2^{-an} n^b to a sweep column");
  fit->add_option("csv", ft.csv, "sweep CSV")->required();
  fit->add_option("--column", ft.column, "column to fit");
  fit->add_option("--theorem", ft.theorem, "compare with a predicted rate");
  fit->add_option("--r", ft.r, "smoothness vector for --theorem");
  fit->add_option("--p", ft.p, "class exponent p");
  fit->add_option("--q", ft.q, "space exponent q");
  fit->add_flag("--all-points", ft.all_points, "do not drop the two smallest n");

  std::string suite;
  std::uint64_t check_seed = 1;
  auto* check = app.add_subcommand("check", "run an inequality check suite, JSON report");
  check->add_option("suite", suite, "suite name or 'all'")->required();
  check->add_option("--seed", check_seed, "seed");

  NormArgs nm;
  auto* norm = app.add_subcommand("norm", "norm of a coefficient file");
  norm->add_option("file", nm.file, "coefficient file")->required();
  norm->add_option("--kind", nm.kind, "lp | bq1 | besov | h_sup");
  norm->add_option("--p", nm.p, "exponent");
  norm->add_option("--theta", nm.theta, "Besov theta (inf allowed)");
  norm->add_option("--r", nm.r, "smoothness vector");
  norm->add_option("--mode", nm.mode, "delta | a_kernel");
  norm->add_option("--oversampling", nm.oversampling, "quadrature oversampling")->check(CLI::Range(1.0, 64.0));

  std::string gen_text, gen_r, gen_out;
  int gen_n = 1;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "write the coefficients of a generator");
  gen->add_option("--gen", gen_text, "generator expression")->required();
  gen->add_option("--n", gen_n, "level for generators that follow n");
  gen->add_option("--r", gen_r, "smoothness vector");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cross) return cmd_cross(cross_d, cross_n, cross_w);
    if (*sweep) return cmd_sweep(sw);
    if (*fit) return cmd_fit(ft);
    if (*check) return cmd_check(suite, check_seed);
    if (*norm) return cmd_norm(nm);
    if (*gen) return cmd_gen(gen_text, gen_n, gen_r, gen_seed, gen_out);
  } catch (const UsageError& e) {
    std::cerr << "hcross: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hcross: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
