#include <algorithm>

#include "doctest.h"
#include "gens.hpp"
#include "oracles.hpp"
#include "sf/core.hpp"

using namespace sf;
using sft::graph_of;

namespace {

ForestCertificate cert(std::initializer_list<std::pair<Vertex, Vertex>> es) {
  std::vector<Edge> out;
  for (auto [a, b] : es) out.emplace_back(a, b);
  return make_certificate(out);
}

}  // namespace

TEST_CASE("graph rejects loops and duplicates") {
  CHECK_THROWS_AS(graph_of(3, {{1, 1}}), SolverError);
  CHECK_THROWS_AS(graph_of(3, {{0, 1}, {1, 0}}), SolverError);
  CHECK_THROWS_AS(graph_of(3, {{0, 3}}), SolverError);
  const Graph g = graph_of(4, {{2, 1}, {0, 3}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < 4; ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * g.num_edges());
}

TEST_CASE("instance drops equal pairs and normalizes") {
  const Instance inst(sft::path_graph(3), {{2, 0}, {1, 1}, {0, 2}});
  CHECK(inst.pairs == std::vector<Pair>{{0, 2}});
}

TEST_CASE("validate_solution") {
  const Instance tri(sft::cycle_graph(3), make_pairs({{0, 1}}));
  CHECK(validate_solution(tri, cert({{0, 1}})));
  CHECK_FALSE(validate_solution(tri, cert({{0, 1}, {1, 2}, {0, 2}})));
  const Instance p3(sft::path_graph(3), make_pairs({{0, 2}}));
  CHECK_FALSE(validate_solution(p3, cert({{0, 1}})));
  CHECK_THROWS_AS(validate_solution(p3, cert({{0, 2}})), SolverError);
}

TEST_CASE("schools_of") {
  const Instance chain(Graph(4, {}), make_pairs({{0, 1}, {1, 2}}));
  const std::vector<Vertex> all{0, 1, 2, 3};
  auto s = schools_of(chain, all);
  CHECK(s.terminal_count == 1);
  CHECK(s.schools == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}});

  const Instance empty(Graph(2, {}), {});
  const std::vector<Vertex> xy{0, 1};
  s = schools_of(empty, xy);
  CHECK(s.terminal_count == 0);
  CHECK(s.schools == std::vector<std::vector<Vertex>>{{0}, {1}});

  const Instance two(Graph(4, {}), make_pairs({{2, 3}, {0, 1}}));
  s = schools_of(two);
  CHECK(s.terminal_count == 2);
  CHECK(s.schools == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
}

TEST_CASE("schools_of is order independent and idempotent") {
  sft::Rand r(5);
  for (int it = 0; it < 200; ++it) {
    auto pairs = sft::random_pairs(r, 9, r.range(0, 6));
    const Instance a(Graph(9, {}), pairs);
    std::reverse(pairs.begin(), pairs.end());
    const Instance b(Graph(9, {}), pairs);
    const auto sa = schools_of(a);
    CHECK(sa.schools == schools_of(b).schools);
    // Feeding the schools back as pairs reproduces them.
    std::vector<Pair> again;
    for (std::size_t i = 0; i < sa.terminal_count; ++i)
      for (std::size_t j = 1; j < sa.schools[i].size(); ++j) again.emplace_back(sa.schools[i][0], sa.schools[i][j]);
    CHECK(schools_of(Instance(Graph(9, {}), again)).schools == sa.schools);
  }
}

TEST_CASE("contract_edge") {
  auto p = contract_edge(sft::path_graph(3), Edge(0, 1));
  CHECK(p.graph.num_vertices() == 2);
  CHECK(p.graph.num_edges() == 1);
  CHECK(p.vertex_map[0] == p.vertex_map[1]);
  CHECK(p.vertex_map[2] != p.vertex_map[0]);

  auto t = contract_edge(sft::cycle_graph(3), Edge(1, 2));
  CHECK(t.graph.num_vertices() == 2);
  CHECK(t.graph.num_edges() == 1);

  auto c = contract_edge(sft::cycle_graph(4), Edge(0, 1));
  CHECK(c.graph == sft::cycle_graph(3));

  CHECK_THROWS_AS(contract_edge(sft::path_graph(3), Edge(0, 2)), SolverError);
}

TEST_CASE("contraction drops exactly one vertex") {
  sft::Rand r(11);
  for (int it = 0; it < 100; ++it) {
    const Graph g = sft::random_connected(r, 8, 6);
    const Edge e = g.edges()[r.below(g.num_edges())];
    CHECK(contract_edge(g, e).graph.num_vertices() + 1 == g.num_vertices());
  }
}

TEST_CASE("deletions") {
  auto p = delete_vertices(sft::path_graph(3), std::vector<Vertex>{1});
  CHECK(p.graph.num_vertices() == 2);
  CHECK(p.graph.num_edges() == 0);

  auto c = delete_edges(sft::cycle_graph(4), std::vector<Edge>{{0, 3}});
  CHECK(c.graph == sft::path_graph(4));

  auto k = delete_vertices(sft::star_graph(3), std::vector<Vertex>{0});
  CHECK(k.graph.num_vertices() == 3);
  CHECK(k.graph.num_edges() == 0);

  CHECK_THROWS_AS(delete_edges(sft::path_graph(3), std::vector<Edge>{{0, 2}}), SolverError);

  auto cleaned = delete_edges(sft::path_graph(3), std::vector<Edge>{{1, 2}}, true);
  CHECK(cleaned.graph.num_vertices() == 2);
  CHECK(cleaned.vertex_map[2] == kNoVertex);
}

TEST_CASE("certificates never undercut the optimum") {
  sft::Rand r(3);
  for (int it = 0; it < 150; ++it) {
    const Instance inst = sft::with_pairs(r, sft::random_connected(r, 7, r.range(0, 5)), r.range(1, 3));
    std::vector<Edge> pick;
    for (const Edge& e : inst.graph.edges())
      if (r.coin(0.6)) pick.push_back(e);
    const ForestCertificate c = make_certificate(pick);
    if (validate_solution(inst, c)) CHECK(c.size() >= *sft::brute_sf(inst));
    CHECK(validate_solution(inst, c) == sft::brute_is_forest_solution(inst, c.edges));
  }
}

TEST_CASE("better orders feasible, value, then edges") {
  const auto a = SolveResult::of(cert({{0, 1}}));
  const auto b = SolveResult::of(cert({{0, 2}}));
  CHECK(better(a, b));
  CHECK_FALSE(better(b, a));
  CHECK(better(b, SolveResult::infeasible()));
  CHECK(better(a, SolveResult::of(cert({{0, 1}, {1, 2}}))));
}

TEST_CASE("set partitions are Bell many") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    for_each_set_partition(n, [&](const std::vector<std::size_t>&) {
      ++count;
      return false;
    });
    CHECK(count == bell[n]);
  }
}
