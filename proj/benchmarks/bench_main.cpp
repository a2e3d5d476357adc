#include <benchmark/benchmark.h>

#include <random>

#include "ghwlab/ghw.hpp"

using namespace ghwlab;

namespace {

CyclicCode make(const CodeParams& p) { return CyclicCode(build_field(p.p, p.s, p.m), p); }

void BM_FieldMul(benchmark::State& state) {
  const auto F = build_field(3, 1, static_cast<unsigned>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<FieldSpec::Code> xs(1024);
  for (auto& x : xs) x = rng() % F->order();
  FieldSpec::Code acc = F->one().code();
  for (auto _ : state) {
    for (auto x : xs) acc = F->add(F->mul(acc, x), 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4)->Arg(8);

void BM_BuildField(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_field(2, 1, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuildField)->Arg(8)->Arg(12)->Arg(16);

void BM_GaussPeriods(benchmark::State& state) {
  const auto F = build_field(3, 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(GaussPeriodTable(*F, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_GaussPeriods)->Arg(1)->Arg(2)->Arg(5);

void BM_CountVanishing(benchmark::State& state) {
  const auto code = make({3, 1, 3, 2, 2, 1, {0, 1}});
  VanishingCounter counter(code, state.range(0) ? std::uint64_t{1} << 23 : 0);
  std::vector<Subspace> hs;
  SubspaceEnumerator it(code.base(), code.dimension(), 2);
  for (int i = 0; i < 256 && it.next(); ++i) hs.push_back(it.current_subspace());
  for (auto _ : state)
    for (const auto& H : hs) benchmark::DoNotOptimize(counter.count(H));
  state.SetItemsProcessed(state.iterations() * hs.size());
}
BENCHMARK(BM_CountVanishing)->Arg(0)->Arg(1);

void BM_Eq1Count(benchmark::State& state) {
  const auto code = make({3, 1, 2, 2, 2, 1, {0, 1}});
  GaussPeriodCounter gp(code);
  std::vector<Subspace> hs;
  SubspaceEnumerator it(code.base(), code.dimension(), 2);
  while (it.next()) hs.push_back(it.current_subspace());
  for (auto _ : state)
    for (const auto& H : hs) benchmark::DoNotOptimize(gp.count(H));
  state.SetItemsProcessed(state.iterations() * hs.size());
}
BENCHMARK(BM_Eq1Count);

void BM_Hierarchy(benchmark::State& state) {
  const auto strategy = static_cast<OracleStrategy>(state.range(0));
  const auto code = make({3, 1, 3, 2, 2, 1, {0, 1}});
  for (auto _ : state) {
    HierarchyOracle oracle(code, OracleOptions{strategy, 1000000, 1});
    benchmark::DoNotOptimize(oracle.hierarchy());
  }
  state.SetLabel(to_string(strategy));
}
BENCHMARK(BM_Hierarchy)
    ->Arg(static_cast<int>(OracleStrategy::kAuto))
    ->Arg(static_cast<int>(OracleStrategy::kSubspaces))
    ->Arg(static_cast<int>(OracleStrategy::kFlats))
    ->Unit(benchmark::kMillisecond);

void BM_SearchRank2(benchmark::State& state) {
  const auto code = make({2, 3, 2, 7, 3, 1, {0, 1, 2}});
  for (auto _ : state) {
    HierarchyOracle oracle(code, OracleOptions{OracleStrategy::kSearch, 1000000, 1});
    benchmark::DoNotOptimize(oracle.rank(2));
  }
}
BENCHMARK(BM_SearchRank2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
