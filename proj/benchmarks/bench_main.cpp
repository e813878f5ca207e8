#include <benchmark/benchmark.h>

#include "jblocks/g2.hpp"
#include "jblocks/rep_ring.hpp"

using namespace jblocks;

static void BM_JordanPartition(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  PrimeField k(5);
  auto phi = tensor_operator(jordan_block(k, n), jordan_block(k, n), FormalGroupLaw::multiplicative().law());
  for (auto _ : state) benchmark::DoNotOptimize(jordan_partition(phi));
  state.SetComplexityN(n * n);
}
BENCHMARK(BM_JordanPartition)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_TensorPartition(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto law = FormalGroupLaw::multiplicative().law();
  for (auto _ : state) benchmark::DoNotOptimize(tensor_partition(Partition{n}, Partition{n}, law, FieldSpec(2)));
}
BENCHMARK(BM_TensorPartition)->DenseRange(4, 16, 4);

static void BM_WedgeSquare(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto law = FormalGroupLaw::multiplicative().law();
  for (auto _ : state) benchmark::DoNotOptimize(wedge_partition(Partition{n}, 2, law, FieldSpec(2)));
}
BENCHMARK(BM_WedgeSquare)->DenseRange(4, 16, 4);

static void BM_WedgeCube(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto law = FormalGroupLaw::additive().law();
  for (auto _ : state) benchmark::DoNotOptimize(wedge_partition(Partition{n}, 3, law, FieldSpec(3)));
}
BENCHMARK(BM_WedgeCube)->DenseRange(4, 10, 3);

static void BM_G2Table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g2_table(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_G2Table)->Arg(5)->Arg(7)->Arg(13);
BENCHMARK_MAIN();
