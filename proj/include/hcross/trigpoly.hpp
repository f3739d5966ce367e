#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "hcross/index.hpp"

namespace hcross {

using Complex = std::complex<double>;

/// Finite trigonometric polynomial sum_k c_k e^{i(k,x)} on T^d.
///
/// Coefficients use the normalized pairing c_k = (2 pi)^{-d} int f e^{-i(k,x)},
/// so ||e^{i(k,.)}||_2 = 1 and convolution is the coefficient-wise product.
/// Entries with |c_k| < 1e-300 are never stored.
class SparseTrigPoly {
 public:
  using Map = std::map<FreqIndex, Complex>;
  static constexpr double kDropBelow = 1e-300;

  explicit SparseTrigPoly(std::size_t d = 1);

  std::size_t dim() const { return d_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  const Map& coeffs() const { return coeffs_; }

  Complex coeff(const FreqIndex& k) const;
  void set(const FreqIndex& k, Complex c);
  void add(const FreqIndex& k, Complex c);

  /// True when no supported frequency has a zero coordinate.
  bool zero_mean() const;
  /// max_k |k_j| over the support, per dimension (zeros when empty).
  std::vector<Int> bandwidth() const;
  /// (sum |c_k|^2)^{1/2}
  double coeff_l2() const;
  double coeff_l1() const;

  SparseTrigPoly& operator+=(const SparseTrigPoly& o);
  SparseTrigPoly& operator-=(const SparseTrigPoly& o);
  SparseTrigPoly& operator*=(Complex a);

  friend SparseTrigPoly operator+(SparseTrigPoly a, const SparseTrigPoly& b) { return a += b; }
  friend SparseTrigPoly operator-(SparseTrigPoly a, const SparseTrigPoly& b) { return a -= b; }
  friend SparseTrigPoly operator*(Complex s, SparseTrigPoly a) { return a *= s; }
  bool operator==(const SparseTrigPoly&) const = default;

 private:
  void check_dim(const FreqIndex& k) const;

  std::size_t d_;
  Map coeffs_;
};

/// Tensor grid x_j = 2 pi m_j / M_j with power-of-two M_j.
struct QuadratureGrid {
  std::vector<std::int64_t> points;
  double oversampling = 8.0;

  std::int64_t total() const;
  /// M_j = smallest power of two >= oversampling * (2 maxfreq_j + 1).
  static QuadratureGrid for_bandwidth(const std::vector<Int>& maxfreq,
                                      double oversampling = 8.0);
  bool covers(const std::vector<Int>& maxfreq) const;
};

/// Samples at all grid points, row-major (last dimension fastest). FFT path.
std::vector<Complex> synthesize(const SparseTrigPoly& f, const QuadratureGrid& grid);
/// Direct evaluation of the exponential sum at every grid point.
std::vector<Complex> synthesize_reference(const SparseTrigPoly& f,
                                          const QuadratureGrid& grid);
/// Forward transform of grid samples: c_k = M^{-1} sum_m v_m e^{-i(k,x_m)} for
/// every k in the box |k_j| <= maxfreq_j; entries below the drop threshold or
/// below `tol` are omitted.
SparseTrigPoly analyze(const std::vector<Complex>& samples, const QuadratureGrid& grid,
                       const std::vector<Int>& maxfreq, double tol = 0.0);

SparseTrigPoly delta_block(const SparseTrigPoly& f, const BlockIndex& s);
/// Blocks touched by the support (requires zero_mean).
std::vector<BlockIndex> support_blocks(const SparseTrigPoly& f);
/// S_Q f: keeps the coefficients whose block lies in the cross.
SparseTrigPoly restrict_to_cross(const SparseTrigPoly& f, const CrossSpec& spec);
/// Multiplier prod_j |k_j|^{r_j} e^{i sign(k_j) alpha_j pi / 2}.
SparseTrigPoly weyl_derivative(const SparseTrigPoly& f, const std::vector<double>& r,
                               const std::vector<double>& alpha);
Complex weyl_multiplier(const FreqIndex& k, const std::vector<double>& r,
                        const std::vector<double>& alpha);
/// Coefficient-wise product.
SparseTrigPoly convolve(const SparseTrigPoly& f, const SparseTrigPoly& g);

/// Text coefficient file: `d=<int>` then `k_1 ... k_d re im` per line.
SparseTrigPoly read_coefficients(std::istream& in);
void write_coefficients(std::ostream& out, const SparseTrigPoly& f);
SparseTrigPoly read_coefficients_file(const std::string& path);
void write_coefficients_file(const std::string& path, const SparseTrigPoly& f);

}  // namespace hcross
