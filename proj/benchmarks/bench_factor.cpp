// Factorization loop end to end: certified roundtrips on banded inputs and
// the window scan that guards them.
#include <benchmark/benchmark.h>

#include <vector>

#include "cyltn/factor.hpp"
#include "cyltn/interlace.hpp"
#include "cyltn/loop_matrix.hpp"
#include "cyltn/network.hpp"
#include "cyltn/rational.hpp"
#include "cyltn/tncheck.hpp"

namespace {

using namespace cyltn;

// Product of bidiagonal slices over a diagonal base, the shape the
// factorization peels one slice at a time.
LoopMatrix banded_input(long slices) {
  CylNetwork net = diagonal_base_network({Rational(2), Rational(3)});
  for (long s = 0; s < slices; ++s)
    net = concatenate(net, bidiagonal_slice_network(
                               {Rational(2 * s + 1), Rational(2 * s + 2)}));
  return folded_weight_matrix(net);
}

void BM_factor_banded(benchmark::State& state) {
  const LoopMatrix m = banded_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor(m));
}
BENCHMARK(BM_factor_banded)->Arg(1)->Arg(2);

void BM_factor_stacked_pair(benchmark::State& state) {
  // Interlacing pair with rational roots; degrees grow with the argument.
  const long k = state.range(0);
  RatPoly p0 = RatPoly::constant(1);
  RatPoly p1 = RatPoly::constant(1);
  for (long i = 0; i < k; ++i) {
    p0 = p0 * RatPoly({Rational(2 * i + 1), Rational(1)});
    p1 = p1 * RatPoly({Rational(2 * i + 2), Rational(1)});
  }
  const LoopMatrix m = hurwitz(p0 * RatPoly({Rational(2 * k + 1), Rational(1)}),
                               p1);
  for (auto _ : state) benchmark::DoNotOptimize(factor(m));
}
BENCHMARK(BM_factor_stacked_pair)->Arg(2)->Arg(4)->Arg(8);

void BM_window_scan(benchmark::State& state) {
  const LoopMatrix m = banded_input(2);
  for (auto _ : state) benchmark::DoNotOptimize(is_tn_window(m, 2, 3));
}
BENCHMARK(BM_window_scan)->Arg(0);

}  // namespace

BENCHMARK_MAIN();
