// Serial reference odometer vs the OpenMP kernel on the same instances.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <cstdlib>
#include <iostream>

#include "homdich/partition/enumerate.hpp"

using namespace homdich;

namespace {

// 3 x cols grid, domain m; edge table A_ij = 1 + (i + j) % 3 with a zero on
// the diagonal of the first value so pruning has something to do.
WeightedInstance grid(std::size_t cols, std::size_t m) {
  const std::size_t n = 3 * cols;
  WeightedInstance inst(n, m);
  std::vector<Rational> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = (i == 0 && j == 0) ? 0 : 1 + (i + j) % 3;
  }
  std::vector<Rational> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = Rational(static_cast<long>(i + 1), 2);
  for (std::size_t v = 0; v < n; ++v) {
    inst.scale_vertex(v, w);
    if (v % 3 != 2) inst.multiply_factor(v, v + 1, table);
    if (v + 3 < n) inst.multiply_factor(v, v + 3, table);
  }
  return inst;
}

EnumerationOptions opts(int threads) {
  EnumerationOptions o;
  o.budget = std::uint64_t{1} << 40;
  o.threads = threads;
  return o;
}

void BM_Serial(benchmark::State& state) {
  const auto inst = grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_serial(inst, opts(1)).value);
  state.counters["terms"] = static_cast<double>(inst.term_count_or_budget_error(opts(1).budget));
}

void BM_Parallel(benchmark::State& state) {
  const auto inst = grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_parallel(inst, opts(threads)).value);
  state.counters["threads"] = threads;
}

void shapes(benchmark::internal::Benchmark* b, bool with_threads) {
  const int max_threads = omp_get_max_threads();
  for (const auto& [cols, m] : {std::pair{2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
    if (!with_threads) {
      b->Args({cols, m});
      continue;
    }
    for (int t = 1; t <= max_threads; t *= 2) b->Args({cols, m, t});
  }
}

BENCHMARK(BM_Serial)->Apply([](auto* b) { shapes(b, false); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Apply([](auto* b) { shapes(b, true); })->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  // Refuse to time kernels that disagree.
  for (std::size_t cols = 2; cols <= 3; ++cols) {
    const auto inst = grid(cols, 3);
    if (enumerate_serial(inst, opts(1)).value != enumerate_parallel(inst, opts(0)).value) {
      std::cerr << "serial and parallel kernels disagree on the 3x" << cols << " grid\n";
      return EXIT_FAILURE;
    }
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return EXIT_FAILURE;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return EXIT_SUCCESS;
}
