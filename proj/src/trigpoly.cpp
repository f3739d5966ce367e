#include "hcross/trigpoly.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hcross/fft.hpp"

namespace hcross {

SparseTrigPoly::SparseTrigPoly(std::size_t d) : d_(d) {
  if (d == 0) throw std::invalid_argument("dimension must be >= 1");
}

void SparseTrigPoly::check_dim(const FreqIndex& k) const {
  if (k.dim() != d_) throw std::invalid_argument("frequency dimension mismatch");
}

Complex SparseTrigPoly::coeff(const FreqIndex& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void SparseTrigPoly::set(const FreqIndex& k, Complex c) {
  check_dim(k);
  if (std::abs(c) < kDropBelow)
    coeffs_.erase(k);
  else
    coeffs_[k] = c;
}

void SparseTrigPoly::add(const FreqIndex& k, Complex c) {
  check_dim(k);
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kDropBelow) coeffs_.erase(it);
}

bool SparseTrigPoly::zero_mean() const {
  for (const auto& [k, c] : coeffs_)
    for (Int v : k.k)
      if (v == 0) return false;
  return true;
}

std::vector<Int> SparseTrigPoly::bandwidth() const {
  std::vector<Int> bw(d_, 0);
  for (const auto& [k, c] : coeffs_)
    for (std::size_t j = 0; j < d_; ++j) bw[j] = std::max(bw[j], std::abs(k[j]));
  return bw;
}

double SparseTrigPoly::coeff_l2() const {
  double acc = 0.0;
  for (const auto& [k, c] : coeffs_) acc += std::norm(c);
  return std::sqrt(acc);
}

double SparseTrigPoly::coeff_l1() const {
  double acc = 0.0;
  for (const auto& [k, c] : coeffs_) acc += std::abs(c);
  return acc;
}

SparseTrigPoly& SparseTrigPoly::operator+=(const SparseTrigPoly& o) {
  if (o.d_ != d_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

SparseTrigPoly& SparseTrigPoly::operator-=(const SparseTrigPoly& o) {
  if (o.d_ != d_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}

SparseTrigPoly& SparseTrigPoly::operator*=(Complex a) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it->second *= a;
    if (std::abs(it->second) < kDropBelow)
      it = coeffs_.erase(it);
    else
      ++it;
  }
  return *this;
}

std::int64_t QuadratureGrid::total() const {
  std::int64_t n = 1;
  for (auto m : points) n *= m;
  return n;
}

QuadratureGrid QuadratureGrid::for_bandwidth(const std::vector<Int>& maxfreq,
                                             double oversampling) {
  if (!(oversampling >= 1.0)) throw std::invalid_argument("oversampling must be >= 1");
  QuadratureGrid g;
  g.oversampling = oversampling;
  for (Int k : maxfreq)
    g.points.push_back(next_pow2(oversampling * (2.0 * static_cast<double>(k) + 1.0)));
  return g;
}

bool QuadratureGrid::covers(const std::vector<Int>& maxfreq) const {
  if (maxfreq.size() != points.size()) return false;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (points[j] < 2 * maxfreq[j] + 1) return false;
  return true;
}

namespace {

void require_cover(const SparseTrigPoly& f, const QuadratureGrid& grid) {
  if (grid.points.size() != f.dim())
    throw std::invalid_argument("grid dimension does not match polynomial");
  if (!grid.covers(f.bandwidth()))
    throw std::invalid_argument("quadrature grid too small for the support");
}

std::int64_t flat_index(const FreqIndex& k, const QuadratureGrid& grid) {
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < k.dim(); ++j) {
    const std::int64_t m = grid.points[j];
    idx = idx * m + ((k[j] % m) + m) % m;
  }
  return idx;
}

}  // namespace

std::vector<Complex> synthesize(const SparseTrigPoly& f, const QuadratureGrid& grid) {
  require_cover(f, grid);
  std::vector<Complex> data(static_cast<std::size_t>(grid.total()));
  for (const auto& [k, c] : f.coeffs()) data[flat_index(k, grid)] += c;
  fft_backward(data, grid.points);
  return data;
}

std::vector<Complex> synthesize_reference(const SparseTrigPoly& f,
                                          const QuadratureGrid& grid) {
  require_cover(f, grid);
  const std::size_t d = f.dim();
  const std::int64_t total = grid.total();
  std::vector<Complex> out(static_cast<std::size_t>(total));
  std::vector<std::int64_t> m(d, 0);
  for (std::int64_t flat = 0; flat < total; ++flat) {
    Complex acc = 0.0;
    for (const auto& [k, c] : f.coeffs()) {
      double phase = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        const std::int64_t M = grid.points[j];
        const std::int64_t km = (((k[j] % M) + M) % M) * m[j] % M;
        phase += 2.0 * std::numbers::pi * static_cast<double>(km) / static_cast<double>(M);
      }
      acc += c * std::polar(1.0, phase);
    }
    out[flat] = acc;
    for (std::size_t j = d; j-- > 0;) {
      if (++m[j] < grid.points[j]) break;
      m[j] = 0;
    }
  }
  return out;
}

SparseTrigPoly analyze(const std::vector<Complex>& samples, const QuadratureGrid& grid,
                       const std::vector<Int>& maxfreq, double tol) {
  const std::size_t d = grid.points.size();
  if (maxfreq.size() != d) throw std::invalid_argument("bandwidth dimension mismatch");
  if (static_cast<std::int64_t>(samples.size()) != grid.total())
    throw std::invalid_argument("sample count does not match grid");
  if (!grid.covers(maxfreq)) throw std::invalid_argument("grid too small for bandwidth");
  // forward transform via conj(backward(conj(v)))
  std::vector<Complex> data(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) data[i] = std::conj(samples[i]);
  fft_backward(data, grid.points);
  const double scale = 1.0 / static_cast<double>(grid.total());

  SparseTrigPoly out(d);
  std::vector<Int> k(d);
  for (std::size_t j = 0; j < d; ++j) k[j] = -maxfreq[j];
  while (true) {
    FreqIndex key(k);
    Complex c = std::conj(data[flat_index(key, grid)]) * scale;
    if (std::abs(c) > tol) out.set(key, c);
    std::size_t j = d;
    while (j-- > 0) {
      if (++k[j] <= maxfreq[j]) break;
      k[j] = -maxfreq[j];
      if (j == 0) return out;
    }
  }
}

SparseTrigPoly delta_block(const SparseTrigPoly& f, const BlockIndex& s) {
  if (s.dim() != f.dim()) throw std::invalid_argument("block dimension mismatch");
  SparseTrigPoly out(f.dim());
  for (const auto& [k, c] : f.coeffs()) {
    bool inside = true;
    for (std::size_t j = 0; j < k.dim() && inside; ++j)
      inside = k[j] != 0 && block_of_1d(k[j]) == s[j];
    if (inside) out.set(k, c);
  }
  return out;
}

std::vector<BlockIndex> support_blocks(const SparseTrigPoly& f) {
  if (!f.zero_mean())
    throw std::invalid_argument("block decomposition needs a zero-mean polynomial");
  std::vector<BlockIndex> out;
  std::map<BlockIndex, bool> seen;
  for (const auto& [k, c] : f.coeffs()) seen[block_of(k)] = true;
  for (const auto& [s, unused] : seen) out.push_back(s);
  return out;
}

SparseTrigPoly restrict_to_cross(const SparseTrigPoly& f, const CrossSpec& spec) {
  if (spec.dim() != f.dim()) throw std::invalid_argument("cross dimension mismatch");
  if (!f.zero_mean())
    throw std::invalid_argument("restrict_to_cross needs a zero-mean polynomial");
  SparseTrigPoly out(f.dim());
  for (const auto& [k, c] : f.coeffs())
    if (spec.contains(block_of(k))) out.set(k, c);
  return out;
}

Complex weyl_multiplier(const FreqIndex& k, const std::vector<double>& r,
                        const std::vector<double>& alpha) {
  double mag = 1.0, phase = 0.0;
  for (std::size_t j = 0; j < k.dim(); ++j) {
    if (k[j] == 0) throw std::invalid_argument("Weyl multiplier undefined at k_j = 0");
    mag *= std::pow(static_cast<double>(std::abs(k[j])), r[j]);
    phase += (k[j] > 0 ? 1.0 : -1.0) * alpha[j] * std::numbers::pi / 2.0;
  }
  return std::polar(mag, phase);
}

SparseTrigPoly weyl_derivative(const SparseTrigPoly& f, const std::vector<double>& r,
                               const std::vector<double>& alpha) {
  if (r.size() != f.dim() || alpha.size() != f.dim())
    throw std::invalid_argument("smoothness/alpha dimension mismatch");
  if (!f.zero_mean())
    throw std::invalid_argument("Weyl derivative needs a zero-mean polynomial");
  SparseTrigPoly out(f.dim());
  for (const auto& [k, c] : f.coeffs()) out.set(k, c * weyl_multiplier(k, r, alpha));
  return out;
}

SparseTrigPoly convolve(const SparseTrigPoly& f, const SparseTrigPoly& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  SparseTrigPoly out(f.dim());
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  for (const auto& [k, c] : small.coeffs()) {
    auto it = large.coeffs().find(k);
    if (it != large.coeffs().end()) out.set(k, c * it->second);
  }
  return out;
}

SparseTrigPoly read_coefficients(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_content = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_content(header)) throw std::runtime_error("coefficient file: missing header");
  std::istringstream hs(header);
  std::string tok;
  hs >> tok;
  if (tok.rfind("d=", 0) != 0)
    throw std::runtime_error("coefficient file: header must be 'd=<int>'");
  int d = 0;
  try {
    d = std::stoi(tok.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("coefficient file: bad dimension in header");
  }
  if (d < 1) throw std::runtime_error("coefficient file: dimension must be >= 1");

  SparseTrigPoly f(static_cast<std::size_t>(d));
  std::map<FreqIndex, bool> seen;
  std::string body;
  while (next_content(body)) {
    std::istringstream ls(body);
    std::vector<Int> k(static_cast<std::size_t>(d));
    for (auto& v : k)
      if (!(ls >> v))
        throw std::runtime_error("coefficient file line " + std::to_string(lineno) +
                                 ": expected " + std::to_string(d) + " integer indices");
    double re = 0.0, im = 0.0;
    if (!(ls >> re >> im))
      throw std::runtime_error("coefficient file line " + std::to_string(lineno) +
                               ": expected re im");
    std::string extra;
    if (ls >> extra)
      throw std::runtime_error("coefficient file line " + std::to_string(lineno) +
                               ": trailing tokens");
    FreqIndex key(std::move(k));
    if (!seen.emplace(key, true).second)
      throw std::runtime_error("coefficient file line " + std::to_string(lineno) +
                               ": duplicate frequency " + to_string(key));
    f.set(key, {re, im});
  }
  return f;
}

void write_coefficients(std::ostream& out, const SparseTrigPoly& f) {
  out << "d=" << f.dim() << '\n';
  out << std::setprecision(17);
  for (const auto& [k, c] : f.coeffs()) {
    for (Int v : k.k) out << v << ' ';
    out << c.real() << ' ' << c.imag() << '\n';
  }
}

SparseTrigPoly read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficient file '" + path + "'");
  return read_coefficients(in);
}

void write_coefficients_file(const std::string& path, const SparseTrigPoly& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write coefficient file '" + path + "'");
  write_coefficients(out, f);
}

}  // namespace hcross
