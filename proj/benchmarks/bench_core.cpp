#include <benchmark/benchmark.h>

#include "gsurj/certify.hpp"
#include "gsurj/curve.hpp"
#include "gsurj/frobenius.hpp"
#include "gsurj/hensel.hpp"
#include "gsurj/modpoly.hpp"
#include "gsurj/pointcount.hpp"
#include "gsurj/primes.hpp"

using namespace gsurj;

namespace {

HyperellipticCurve example_curve() {
  return HyperellipticCurve::validate(IntPoly{-196, 7, -12, 4, 15, -5, -3, 1}, 3);
}

const IntPoly kP11{1331, -121, 77, -35, 7, -1, 1};

void BM_CountPoints(benchmark::State& state, CharMethod method) {
  const auto C = example_curve();
  const uint64_t q = state.range(0);
  const unsigned r = (unsigned)state.range(1);
  CountOptions opts;
  opts.method = method;
  opts.jobs = 1;
  uint64_t Q = 1;
  for (unsigned i = 0; i < r; ++i) Q *= q;
  for (auto _ : state) benchmark::DoNotOptimize(count_points(C, q, r, opts));
  state.SetItemsProcessed(state.iterations() * Q);
}

void BM_RabinSieve(benchmark::State& state) {
  const uint64_t bound = state.range(0);
  const auto primes = sieve_primes(bound);
  for (auto _ : state) {
    uint64_t members = 0;
    for (uint64_t l : primes) {
      if (924 % l == 0) continue;
      Zmod R(l);
      if (is_irreducible(reduce_mod(kP11, R))) ++members;
    }
    benchmark::DoNotOptimize(members);
  }
  state.SetItemsProcessed(state.iterations() * primes.size());
}

void BM_Discriminant(benchmark::State& state) {
  const IntPoly f{-196, 7, -12, 4, 15, -5, -3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}

void BM_NodeThickness(benchmark::State& state) {
  const auto C = example_curve();
  for (auto _ : state) benchmark::DoNotOptimize(node_thickness(C.f(), 7, 0));
}

void BM_SievePrimes(benchmark::State& state) {
  const uint64_t bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(bound));
}

void BM_CharpolyReconstruct(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(charpoly_from_counts(11, 3, {11, 135, 1247}));
}

}  // namespace

BENCHMARK_CAPTURE(BM_CountPoints, bitmap, CharMethod::kBitmap)
    ->Args({11, 3})
    ->Args({101, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CountPoints, ladder, CharMethod::kLadder)
    ->Args({11, 3})
    ->Args({101, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CountPoints, norm, CharMethod::kNorm)
    ->Args({11, 3})
    ->Args({101, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RabinSieve)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Discriminant);
BENCHMARK(BM_NodeThickness);
BENCHMARK(BM_SievePrimes)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharpolyReconstruct);

BENCHMARK_MAIN();
