#include "hcross/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace hcross {

namespace {
// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void fft_backward(std::vector<Complex>& data, const std::vector<std::int64_t>& extents) {
  std::int64_t total = 1;
  std::vector<int> n;
  for (auto e : extents) {
    if (e < 1) throw std::invalid_argument("fft extent must be positive");
    total *= e;
    n.push_back(static_cast<int>(e));
  }
  if (static_cast<std::int64_t>(data.size()) != total)
    throw std::invalid_argument("fft buffer size does not match extents");
  if (total == 0) return;

  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(n.size()), n.data(), buf, buf,
                         FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw planning failed");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

std::int64_t next_pow2(double x) {
  std::int64_t m = 1;
  while (static_cast<double>(m) < x) m <<= 1;
  return m;
}

}  // namespace hcross
