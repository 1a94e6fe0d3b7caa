// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "isk4col/cutsets.hpp"
#include "isk4col/generators.hpp"
#include "isk4col/patterns.hpp"
#include "isk4col/pipeline.hpp"

using namespace isk4col;

namespace {

Graph hub_graph() {
  Side l = line_side(complete_graph(4), {0, 1});
  return gen_hub(1, {l, l, prism_side()});
}

void BM_isk4_serial(benchmark::State& st) {
  Graph g = hub_graph();
  for (auto _ : st) benchmark::DoNotOptimize(find_isk4_serial(g));
  st.counters["n"] = static_cast<double>(g.order());
}

void BM_isk4_parallel(benchmark::State& st) {
  Graph g = hub_graph();
  Isk4Options o;
  o.budget = g.order();
  o.parallel = true;
  for (auto _ : st) benchmark::DoNotOptimize(find_isk4(g, o));
  st.counters["n"] = static_cast<double>(g.order());
}

// many independent subtrees: prisms and K33s glued in a chain on edges
Graph glued_chain(int parts) {
  std::vector<Graph> ps;
  for (int i = 0; i < parts; ++i) ps.push_back(i % 2 ? complete_bipartite(3, 3) : prism_graph());
  return gen_glue(5, ps, GlueMode::edge, 64, 0);
}

void BM_tree(benchmark::State& st) {
  Graph g = glued_chain(400);
  const int jobs = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_clique_tree(g, jobs));
  st.counters["n"] = static_cast<double>(g.order());
}

void BM_color(benchmark::State& st) {
  Graph g = glued_chain(400);
  PipelineOptions o;
  o.jobs = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(color_class_member(g, o));
}

void BM_color_sp(benchmark::State& st) {
  Graph g = gen_series_parallel(1, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(color_class_member(g));
  st.SetComplexityN(st.range(0));
}

}  // namespace

BENCHMARK(BM_isk4_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isk4_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tree)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_color)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_color_sp)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
