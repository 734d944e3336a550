// Serial vs OpenMP kernels on pentagonal-sized inputs.
#include <benchmark/benchmark.h>

#include "mexlab/kernels.hpp"
#include "mexlab/mex_series.hpp"
#include "mexlab/series.hpp"

using namespace mexlab;
namespace k = mexlab::kernels;

namespace {

TruncSeries inputs(std::size_t n) { return sigma_series(n); }

void BM_dense_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncSeries a = inputs(n);
  std::vector<mpz_class> out(n + 1);
  for (auto _ : state) k::dense_convolve_serial(a.coeffs(), a.coeffs(), out);
}

void BM_dense_omp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncSeries a = inputs(n);
  std::vector<mpz_class> out(n + 1);
  for (auto _ : state) k::dense_convolve(a.coeffs(), a.coeffs(), out);
}

void BM_sparse_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncSeries a = inputs(n);
  const auto f = k::nonzero_terms(pochhammer(1, n).coeffs());
  std::vector<mpz_class> out(n + 1);
  for (auto _ : state) k::sparse_convolve_serial(f, a.coeffs(), out);
}

void BM_sparse_omp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncSeries a = inputs(n);
  const auto f = k::nonzero_terms(pochhammer(1, n).coeffs());
  std::vector<mpz_class> out(n + 1);
  for (auto _ : state) k::sparse_convolve(f, a.coeffs(), out);
}

void BM_count_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncSeries a = inputs(n);
  const mpz_class m = 8;
  for (auto _ : state) benchmark::DoNotOptimize(k::count_divisible_serial(a.coeffs(), m, 1, n));
}

void BM_count_omp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncSeries a = inputs(n);
  const mpz_class m = 8;
  for (auto _ : state) benchmark::DoNotOptimize(k::count_divisible(a.coeffs(), m, 1, n));
}

void BM_g_series(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_series(n));
}

}  // namespace

BENCHMARK(BM_dense_serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dense_omp)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sparse_serial)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sparse_omp)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_omp)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_g_series)->Arg(10000)->Arg(30000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
