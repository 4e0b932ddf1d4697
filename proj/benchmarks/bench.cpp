#include <benchmark/benchmark.h>

#include <random>

#include "modprod/corpus.hpp"
#include "modprod/dist.hpp"
#include "modprod/families.hpp"
#include "modprod/products.hpp"
#include "modprod/srg.hpp"
#include "modprod/vertex_cover.hpp"

using namespace modprod;

namespace {

Graph random_instance(int n, double p) {
  std::mt19937_64 rng(12345);
  return random_graph(n, p, rng);
}

void bm_all_pairs_distances(benchmark::State& state) {
  const Graph g = random_instance(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(bm_all_pairs_distances)->Arg(64)->Arg(128)->Arg(256);

void bm_parity_distances(benchmark::State& state) {
  const Graph g = random_instance(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(parity_distances(g));
}
BENCHMARK(bm_parity_distances)->Arg(64)->Arg(128);

void bm_build_modular_product(benchmark::State& state) {
  const Graph g = generate(FamilySpec::cycle(static_cast<int>(state.range(0))));
  const Graph h = generate(FamilySpec::cycle(static_cast<int>(state.range(0)) + 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_product(ProductKind::modular, g, h));
}
BENCHMARK(bm_build_modular_product)->Arg(8)->Arg(12)->Arg(16);

void bm_srg_oracle(benchmark::State& state) {
  const Graph g = generate(FamilySpec::cycle(static_cast<int>(state.range(0))));
  const Graph prod = build_product(ProductKind::modular, g, g);
  for (auto _ : state) benchmark::DoNotOptimize(srg_oracle(prod));
}
BENCHMARK(bm_srg_oracle)->Arg(7)->Arg(9)->Arg(11);

void bm_srg_diam3_builder(benchmark::State& state) {
  const Graph g = generate(FamilySpec::star(3));
  const Graph h = generate(FamilySpec::hstq(4, 4, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(srg_modular_diam3(g, h));
}
BENCHMARK(bm_srg_diam3_builder)->Arg(3)->Arg(6);

void bm_min_vertex_cover_cycles(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const Graph g = generate(FamilySpec::cycle(s));
  const Graph h = generate(FamilySpec::cycle(s + 1));
  const SrgGraph srg = srg_modular_diam2(g, h);
  for (auto _ : state) benchmark::DoNotOptimize(min_vertex_cover(srg.skeleton));
}
BENCHMARK(bm_min_vertex_cover_cycles)->Arg(7)->Arg(8)->Arg(9);

void bm_dimension_pipeline(benchmark::State& state) {
  const Graph g = generate(FamilySpec::cycle(7));
  for (auto _ : state)
    benchmark::DoNotOptimize(strong_metric_dimension_modular(g, g));
}
BENCHMARK(bm_dimension_pipeline);

}  // namespace

BENCHMARK_MAIN();
