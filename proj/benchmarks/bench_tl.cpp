// Diagram algebra costs: basis enumeration, element products, immanant
// vectors, and the minor-product identity check.
#include <benchmark/benchmark.h>

#include "cyltn/dense.hpp"
#include "cyltn/prng.hpp"
#include "cyltn/rational.hpp"
#include "cyltn/tl.hpp"

namespace {

using namespace cyltn;

DenseMatrix sample_dense(long n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  DenseMatrix m(n, n);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) m.set(i, j, Rational(rng.below(10)));
  return m;
}

void BM_tl_basis(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(tl_basis(n));
}
BENCHMARK(BM_tl_basis)->Arg(4)->Arg(6)->Arg(8);

void BM_tl_multiply(benchmark::State& state) {
  const long n = state.range(0);
  TlElement a(n);
  TlElement b(n);
  for (const NcMatching& d : tl_basis(n)) {
    a.add_term(d, LaurentPoly::monomial(Rational(1), 0));
    b.add_term(d, LaurentPoly::monomial(Rational(1), 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(tl_multiply(a, b));
}
BENCHMARK(BM_tl_multiply)->Arg(3)->Arg(4)->Arg(5);

void BM_immanant_vector(benchmark::State& state) {
  const long n = state.range(0);
  const DenseMatrix m = sample_dense(n, 21);
  for (auto _ : state) benchmark::DoNotOptimize(immanant_vector(m));
}
BENCHMARK(BM_immanant_vector)->Arg(3)->Arg(4)->Arg(5);

void BM_verify_rs(benchmark::State& state) {
  const long n = state.range(0);
  const DenseMatrix m = sample_dense(n, 22);
  const std::vector<long> I = {1, 2};
  const std::vector<long> J = {1, n};
  for (auto _ : state) benchmark::DoNotOptimize(verify_rs(m, I, J));
}
BENCHMARK(BM_verify_rs)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
