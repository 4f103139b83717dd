// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "rbq/kernels.hpp"
#include "rbq/matrix.hpp"
#include "rbq/random.hpp"

using namespace rbq;

namespace {

Matrix sample(Index rows, Index cols, std::uint64_t seed) {
  Rng rng(seed);
  return rng.normal_matrix(rows, cols);
}

RBMatrix sample_rb(Index rows, Index cols, std::uint64_t seed) {
  return {sample(rows, cols, seed), sample(rows, cols, seed + 1), sample(rows, cols, seed + 2),
          sample(rows, cols, seed + 3)};
}

void BM_JacobiParallel(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix a = sample(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::jacobi_svd(a));
}

void BM_JacobiSerial(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix a = sample(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::jacobi_svd_serial(a));
}

void BM_ReflectorParallel(benchmark::State& state) {
  const Index n = state.range(0);
  Matrix block = sample(4 * n, n, 2);
  const Vector v = sample(4 * n, 1, 3).col(0);
  const double beta = 2.0 / v.squaredNorm();
  for (auto _ : state) {
    kernels::apply_reflector(v, beta, block);
    benchmark::ClobberMemory();
  }
}

void BM_ReflectorSerial(benchmark::State& state) {
  const Index n = state.range(0);
  Matrix block = sample(4 * n, n, 2);
  const Vector v = sample(4 * n, 1, 3).col(0);
  const double beta = 2.0 / v.squaredNorm();
  for (auto _ : state) {
    kernels::apply_reflector_serial(v, beta, block);
    benchmark::ClobberMemory();
  }
}

void BM_RbMatmulParallel(benchmark::State& state) {
  const Index n = state.range(0);
  const RBMatrix a = sample_rb(n, n, 10);
  const RBMatrix b = sample_rb(n, n, 20);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rb_matmul(a, b));
}

void BM_RbMatmulSerial(benchmark::State& state) {
  const Index n = state.range(0);
  const RBMatrix a = sample_rb(n, n, 10);
  const RBMatrix b = sample_rb(n, n, 20);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rb_matmul_serial(a, b));
}

}  // namespace

BENCHMARK(BM_JacobiParallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_JacobiSerial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_ReflectorParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_ReflectorSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_RbMatmulParallel)->Arg(32)->Arg(128);
BENCHMARK(BM_RbMatmulSerial)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
