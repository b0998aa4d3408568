#include "spanlab/canonical.hpp"
#include "spanlab/copyfamily.hpp"
#include "spanlab/density.hpp"
#include "spanlab/fragmentation.hpp"
#include "spanlab/structures.hpp"
#include "spanlab/threshold.hpp"

#include <benchmark/benchmark.h>

using namespace spanlab;

namespace {

void BM_EnumerateC4(benchmark::State& state) {
  const auto spec = StructureSpec::c4_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_copies(spec).size());
}
BENCHMARK(BM_EnumerateC4)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_EnumerateKrs(benchmark::State& state) {
  const auto spec = StructureSpec::krs_cycle(5, 2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_copies(spec).size());
}
BENCHMARK(BM_EnumerateKrs)->Unit(benchmark::kMillisecond);

// Containment search on G(n,p) hosts near the empirical half point.
void BM_SpanningSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpanningSearcher searcher(StructureSpec::c4_cycle(n));
  std::vector<LabeledGraph> hosts;
  for (std::uint64_t s = 0; s < 64; ++s) hosts.push_back(sample_gnp(n, 0.5, s));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(searcher.search(hosts[i++ % hosts.size()]).status);
}
BENCHMARK(BM_SpanningSearch)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_FragmentStep(benchmark::State& state) {
  const auto family = enumerate_copies(StructureSpec::c4_cycle(8));
  const auto start = initial_state(family);
  const auto X = nested_exposure(family.ground_m(), static_cast<std::size_t>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(fragment_step(start, X, 5).good_count);
}
BENCHMARK(BM_FragmentStep)->Arg(7)->Arg(14)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = build_structure(StructureSpec::c4_cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g.edges()));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(16)->Arg(40);

void BM_DensestSubset(benchmark::State& state) {
  const auto g = build_structure(StructureSpec::krs_cycle(4, 2, 32));
  const int v = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(densest_subset(g, v).edges);
}
BENCHMARK(BM_DensestSubset)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
