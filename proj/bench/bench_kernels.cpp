#include <benchmark/benchmark.h>

#include "hopfcyc/cohomology.hpp"

using namespace hopfcyc;

namespace {

const HopfCyclicModule& sweedler_module() {
  static const HopfCyclicModule m = [] {
    FiniteHopf h = builders::sweedler();
    Character d = h.character("delta");
    return HopfCyclicModule(h, d);
  }();
  return m;
}

void BM_CyclicParallel(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweedler_module().assemble_cyclic(n));
}

void BM_CyclicReference(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweedler_module().reference_cyclic(n));
}

void BM_FaceParallel(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweedler_module().assemble_face(1, n));
}

void BM_FaceReference(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweedler_module().reference_face(1, n));
}

void BM_Multiply(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  const SparseMatrix& t = sweedler_module().cyclic(n);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(t, t));
}

void BM_MultiplySerial(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  const SparseMatrix& t = sweedler_module().cyclic(n);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(t, t));
}

void BM_RankSparse(benchmark::State& state) {
  SparseMatrix const b = hochschild_b(sweedler_module(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(detail::rank_sparse(b));
}

void BM_RankDense(benchmark::State& state) {
  SparseMatrix const b = hochschild_b(sweedler_module(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(detail::rank_dense(b));
}

}  // namespace

BENCHMARK(BM_CyclicParallel)->DenseRange(2, 5);
BENCHMARK(BM_CyclicReference)->DenseRange(2, 5);
BENCHMARK(BM_FaceParallel)->DenseRange(2, 5);
BENCHMARK(BM_FaceReference)->DenseRange(2, 5);
BENCHMARK(BM_Multiply)->DenseRange(2, 5);
BENCHMARK(BM_MultiplySerial)->DenseRange(2, 5);
BENCHMARK(BM_RankSparse)->DenseRange(2, 4);
BENCHMARK(BM_RankDense)->DenseRange(2, 4);

BENCHMARK_MAIN();
