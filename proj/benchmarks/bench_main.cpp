#include <benchmark/benchmark.h>

#include "roth/roth.hpp"

using namespace roth;

namespace {

FiniteGroup group_of_order(std::int64_t n) { return make_named_group(GroupSpec::cyclic(static_cast<std::size_t>(n))); }

void BM_TriangleCensusFull(benchmark::State& state) {
  const auto g = group_of_order(state.range(0));
  const auto graph = build_stage1_graph(PairSet::full(g), FullScope{});
  for (auto _ : state) benchmark::DoNotOptimize(triangle_census(graph));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TriangleCensusFull)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_BuildStage1Graph(benchmark::State& state) {
  const auto g = group_of_order(state.range(0));
  const auto set = PairSet::random(g, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_stage1_graph(set, FullScope{}));
}
BENCHMARK(BM_BuildStage1Graph)->RangeMultiplier(2)->Range(8, 64);

void BM_FindElsoSparse(benchmark::State& state) {
  const auto g = group_of_order(state.range(0));
  // Sparse enough that most instances scan the whole space.
  const auto set = PairSet::random(g, 0.05, 3);
  const auto h = Subgroup::whole(g);
  for (auto _ : state) benchmark::DoNotOptimize(count_elso(set, h));
}
BENCHMARK(BM_FindElsoSparse)->RangeMultiplier(2)->Range(8, 64);

void BM_ElsoViaGraphAllCosets(benchmark::State& state) {
  const auto g = make_named_group(GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::symmetric(4)));
  const auto h = sylow_subgroup(g, 3);
  const auto set = PairSet::random(g, 0.1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(find_elso_via_graph(set, h, ScopePolicy::kAllCosetPairs));
}
BENCHMARK(BM_ElsoViaGraphAllCosets);

void BM_AllSubgroups(benchmark::State& state) {
  const auto g = make_named_group(parse_group_spec(state.range(0) == 0 ? "symmetric:4" : "elemab:2:6"));
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g));
}
BENCHMARK(BM_AllSubgroups)->Arg(0)->Arg(1);

void BM_MaxFreeExactAp3(benchmark::State& state) {
  const auto g = group_of_order(state.range(0));
  const ExtremalProblem problem{g, Subgroup::whole(g), ConfigKind::kAp3};
  for (auto _ : state) benchmark::DoNotOptimize(max_free_exact(problem));
}
BENCHMARK(BM_MaxFreeExactAp3)->DenseRange(9, 15, 2)->Unit(benchmark::kMillisecond);

void BM_HarmadikPipeline(benchmark::State& state) {
  const auto g = make_named_group(GroupSpec::cyclic(27));
  const auto set = PairSet::random(g, 0.7, 9);
  for (auto _ : state) benchmark::DoNotOptimize(harmadik_pipeline(set, std::nullopt));
}
BENCHMARK(BM_HarmadikPipeline);

}  // namespace
BENCHMARK_MAIN();
