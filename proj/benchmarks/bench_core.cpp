// Exact arithmetic kernels: folded products, unfolded windows, and window
// determinants at the sizes the test corpus exercises.
#include <benchmark/benchmark.h>

#include "cyltn/dense.hpp"
#include "cyltn/loop_matrix.hpp"
#include "cyltn/prng.hpp"
#include "cyltn/rational.hpp"

namespace {

using namespace cyltn;

LoopMatrix sample_matrix(long n, long degrees, std::uint64_t seed) {
  SplitMix64 rng(seed);
  LoopMatrix out(n, n);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      LaurentPoly p;
      for (long d = 0; d < degrees; ++d)
        p.add_term(Rational(rng.range(1, 9)) / Rational(rng.range(1, 4)), d);
      out.set_entry(i, j, p);
    }
  return out;
}

void BM_loop_mul(benchmark::State& state) {
  const long n = state.range(0);
  const LoopMatrix a = sample_matrix(n, 3, 11);
  const LoopMatrix b = sample_matrix(n, 3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(loop_mul(a, b));
}
BENCHMARK(BM_loop_mul)->Arg(2)->Arg(4)->Arg(8);

void BM_window(benchmark::State& state) {
  const long n = state.range(0);
  const LoopMatrix m = sample_matrix(n, 3, 13);
  for (auto _ : state) benchmark::DoNotOptimize(m.window(3 * n, 3 * n));
}
BENCHMARK(BM_window)->Arg(2)->Arg(4)->Arg(8);

void BM_window_determinant(benchmark::State& state) {
  const long n = state.range(0);
  const LoopMatrix m = sample_matrix(n, 2, 14);
  const DenseMatrix w = m.window(2 * n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(w.determinant());
}
BENCHMARK(BM_window_determinant)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
