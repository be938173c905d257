#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lin3/codec.hpp"
#include "lin3/constructions.hpp"
#include "lin3/search.hpp"

namespace {

lin3::SearchBudget workers(int w) {
  lin3::SearchBudget b;
  b.workers = w;
  return b;
}

void BM_CountLinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lin3::count_linear_systems(n, lin3::SystemPredicate::all(), workers(1)));
}
BENCHMARK(BM_CountLinear)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CountRs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lin3::count_linear_systems(7, lin3::SystemPredicate::rs(), workers(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_CountRs)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_RsMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lin3::rs_max(n, workers(1)).edges);
}
BENCHMARK(BM_RsMax)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_MatchInducedB4(benchmark::State& state) {
  const auto b4 = lin3::bose_burton(4);
  const lin3::HostIndex host(b4);
  const auto w3 = lin3::whirl3();
  for (auto _ : state) benchmark::DoNotOptimize(lin3::contains_pattern(host, w3, lin3::MatchMode::Induced));
}
BENCHMARK(BM_MatchInducedB4);

void BM_MatchSubgraphB6(benchmark::State& state) {
  const auto b6 = lin3::bose_burton(6);
  const lin3::HostIndex host(b6);
  const auto fan = lin3::fan();
  for (auto _ : state) benchmark::DoNotOptimize(lin3::contains_pattern(host, fan, lin3::MatchMode::Subgraph));
}
BENCHMARK(BM_MatchSubgraphB6);

void BM_CodecRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<lin3::PavingLines> inputs;
  std::uniform_int_distribution<int> size(3, 8);
  for (int i = 0; i < 64; ++i) {
    std::vector<int> pts(9);
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(static_cast<std::size_t>(size(rng)));
    inputs.push_back(lin3::PavingLines::make(9, {pts}));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = inputs[i++ % inputs.size()];
    benchmark::DoNotOptimize(lin3::decode(lin3::encode(p)));
  }
}
BENCHMARK(BM_CodecRoundTrip);

void BM_SparsePaving(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lin3::count_sparse_paving(7, r, workers(1)));
}
BENCHMARK(BM_SparsePaving)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
