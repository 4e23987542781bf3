#include <benchmark/benchmark.h>

#include "horoclif/lambda.hpp"
#include "horoclif/matrix.hpp"
#include "horoclif/minkowski.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/rng.hpp"
#include "horoclif/spinor.hpp"

using namespace horoclif;

namespace {
Multivector random_full(int n, Rng& rng) {
  Multivector m{Signature{0, n}};
  for (uint32_t i = 0; i < m.size(); ++i) m[i] = rng.normal();
  return m;
}
}  // namespace

static void BM_GeometricProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Multivector a = random_full(n, rng);
  const Multivector b = random_full(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_GeometricProduct)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_ExponentialClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  Multivector v{Signature{0, n}};
  for (int j = 1; j <= n; ++j) v[1u << (j - 1)] = rng.normal();
  v = v * (1.7 / frobenius(v));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponential(v));
  }
}
BENCHMARK(BM_ExponentialClosed)->Arg(3)->Arg(6);

static void BM_ExponentialSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const Multivector x = random_full(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponential_series(x));
  }
}
BENCHMARK(BM_ExponentialSeries)->Arg(3)->Arg(6);

static void BM_Basepoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const Spinor k = random_spinor(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(basepoint(k));
  }
}
BENCHMARK(BM_Basepoint)->Arg(2)->Arg(4);

static void BM_LambdaLength(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  const Spinor k1 = random_spinor(n, rng);
  const Spinor k2 = random_spinor(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_length(k1, k2));
  }
}
BENCHMARK(BM_LambdaLength)->Arg(2)->Arg(4);

static void BM_PtolemyResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(6);
  Spinor a = random_spinor(n, rng), b = random_spinor(n, rng),
         c = random_spinor(n, rng), d = random_spinor(n, rng);
  while (pair_conditioning({a, b, c, d}) < 1e-3) {
    a = random_spinor(n, rng);
    b = random_spinor(n, rng);
    c = random_spinor(n, rng);
    d = random_spinor(n, rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptolemy_residual(a, b, c, d));
  }
}
BENCHMARK(BM_PtolemyResidual)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
