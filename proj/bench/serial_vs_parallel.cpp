// Serial reference vs OpenMP sweep for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "sf/dispatch.hpp"
#include "sf/fpt.hpp"
#include "sf/harness.hpp"
#include "sf/oracle.hpp"

namespace {

sf::Exec mode(const benchmark::State& state) { return state.range(0) ? sf::Exec::parallel : sf::Exec::serial; }

void BM_subset_enum(benchmark::State& state) {
  sf::GenSpec spec;
  spec.kind = sf::GenKind::planted_cover;
  spec.n = 12;
  spec.param = 4;
  spec.edge_prob = 0.35;
  spec.pair_count = 4;
  spec.seed = 7;
  const sf::Instance inst = sf::generate(spec).instance;
  for (auto _ : state) benchmark::DoNotOptimize(sf::sf_subset_enum(inst, {}, mode(state)));
  state.SetLabel(std::to_string(inst.graph.num_edges()) + " edges");
}

void BM_vertex_cover(benchmark::State& state) {
  sf::GenSpec spec;
  spec.kind = sf::GenKind::planted_cover;
  spec.n = 40;
  spec.param = 7;
  spec.edge_prob = 0.25;
  spec.pair_count = 4;
  spec.seed = 11;
  const sf::Generated g = sf::generate(spec);
  for (auto _ : state) benchmark::DoNotOptimize(sf::solve_vertex_cover_fpt(g.instance, g.witness.cover, mode(state)));
}

void BM_two_claw_sweep(benchmark::State& state) {
  // Wheel with every other spoke: hub degree 8, rim vertices of degree <= 3.
  const std::size_t rim = 16;
  std::vector<sf::Edge> edges;
  for (sf::Vertex i = 0; i < rim; ++i) {
    edges.emplace_back(1 + i, 1 + (i + 1) % rim);
    if (i % 2 == 0) edges.emplace_back(0, 1 + i);
  }
  const sf::Instance inst(sf::Graph(rim + 1, edges), sf::make_pairs({{1, 9}, {4, 13}, {6, 7}}));
  sf::Limits limits;
  limits.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(sf::solve_2k13_free(inst, limits));
}

}  // namespace

BENCHMARK(BM_subset_enum)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_vertex_cover)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_two_claw_sweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
