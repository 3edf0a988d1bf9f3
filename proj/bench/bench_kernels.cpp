#include <benchmark/benchmark.h>

#include "hecke_atlas/corpus.hpp"
#include "hecke_atlas/kernels.hpp"

using namespace hecke_atlas;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_SupercuspidalCounts(benchmark::State& state) {
  const auto inv = corpus::test_inventory();
  const auto phis = corpus::supercuspidal_corpus(inv, 9);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_batch(phis, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(phis.size()));
}

void BM_MatrixOracle(benchmark::State& state) {
  const auto inv = corpus::test_inventory();
  const auto phis = corpus::discrete_corpus(inv, 8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matrix_batch(inv, phis, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(phis.size()));
}

void BM_WeylStabilizers(benchmark::State& state) {
  const auto cases = kernels::weyl_cases(4, true);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weyl_batch(cases, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size()));
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_SupercuspidalCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeylStabilizers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
