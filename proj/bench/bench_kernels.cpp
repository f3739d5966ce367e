// Serial reference vs OpenMP versions of the grid reductions.

#include <benchmark/benchmark.h>

#include <vector>

#include "hcross/grid_kernels.hpp"
#include "hcross/kernels.hpp"

using namespace hcross;

namespace {

std::vector<Complex> random_samples(std::size_t n, std::uint64_t seed) {
  Lcg g(seed);
  std::vector<Complex> v(n);
  for (auto& z : v) z = Complex(g.uniform() - 0.5, g.uniform() - 0.5);
  return v;
}

kernels::TensorSamples random_tensor(std::int64_t m, int terms) {
  kernels::TensorSamples t;
  t.extents = {m, m};
  for (int i = 0; i < terms; ++i) {
    t.weights.emplace_back(1.0, 0.0);
    t.factors.push_back({random_samples(static_cast<std::size_t>(m), 2 * i + 1),
                         random_samples(static_cast<std::size_t>(m), 2 * i + 2)});
  }
  return t;
}

void BM_sum_abs_pow_serial(benchmark::State& st) {
  const auto v = random_samples(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::sum_abs_pow_serial(v, 3.0));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_sum_abs_pow(benchmark::State& st) {
  const auto v = random_samples(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::sum_abs_pow(v, 3.0));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_tensor_sum_abs_pow_serial(benchmark::State& st) {
  const auto t = random_tensor(st.range(0), 8);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::tensor_sum_abs_pow_serial(t, 3.0));
  st.SetItemsProcessed(st.iterations() * t.points());
}

void BM_tensor_sum_abs_pow(benchmark::State& st) {
  const auto t = random_tensor(st.range(0), 8);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::tensor_sum_abs_pow(t, 3.0));
  st.SetItemsProcessed(st.iterations() * t.points());
}

std::vector<std::vector<Complex>> random_rows(int n, std::size_t m) {
  std::vector<std::vector<Complex>> rows;
  for (int i = 0; i < n; ++i) rows.push_back(random_samples(m, 100 + i));
  return rows;
}

void BM_gram_serial(benchmark::State& st) {
  const auto rows = random_rows(static_cast<int>(st.range(0)), 4096);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gram_serial(rows));
}

void BM_gram(benchmark::State& st) {
  const auto rows = random_rows(static_cast<int>(st.range(0)), 4096);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gram(rows));
}

}  // namespace

BENCHMARK(BM_sum_abs_pow_serial)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_sum_abs_pow)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_tensor_sum_abs_pow_serial)->Range(64, 1024);
BENCHMARK(BM_tensor_sum_abs_pow)->Range(64, 1024);
BENCHMARK(BM_gram_serial)->Range(8, 128);
BENCHMARK(BM_gram)->Range(8, 128);

BENCHMARK_MAIN();
