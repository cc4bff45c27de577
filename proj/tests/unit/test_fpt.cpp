#include <algorithm>

#include "doctest.h"
#include "gens.hpp"
#include "oracles.hpp"
#include "sf/fpt.hpp"
#include "sf/oracle.hpp"

using namespace sf;
using sft::graph_of;

TEST_CASE("assignment") {
  CHECK(min_weight_perfect_matching({{3}}).weight == 3);
  CHECK(min_weight_perfect_matching({{1, 2}, {2, 1}}).weight == 2);
  CHECK_FALSE(min_weight_perfect_matching({{kNoArc, kNoArc}, {1, 1}}).feasible);
  CHECK_THROWS_AS(min_weight_perfect_matching({{1, 2}}), SolverError);
  sft::Rand r(51);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = r.range(1, 6);
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n));
    for (auto& row : w)
      for (auto& x : row) x = r.coin(0.2) ? kNoArc : static_cast<std::int64_t>(r.below(10));
    const auto got = min_weight_perfect_matching(w);
    const auto want = sft::brute_assignment(w);
    CHECK(got.feasible == want.has_value());
    if (want) {
      CHECK(got.weight == *want);
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += w[i][got.mate[i]];
      CHECK(sum == got.weight);
    }
  }
}

TEST_CASE("hierarchy counts") {
  CHECK(enumerate_hierarchies(1).size() == 1);
  CHECK(enumerate_hierarchies(1).front().internal() == 0);
  CHECK(enumerate_hierarchies(2).size() == 1);
  for (std::size_t z = 1; z <= 6; ++z) CHECK(enumerate_hierarchies(z).size() == sft::brute_hierarchy_count(z));
  CHECK_THROWS_AS(enumerate_hierarchies(kHierarchyLeafGuard + 1), SolverError);
}

TEST_CASE("pattern forests combine hierarchies") {
  const auto one = enumerate_pattern_forests({1});
  REQUIRE(one.size() == 1);
  CHECK(one.front().beta == 0);
  CHECK(enumerate_pattern_forests({2}).size() == 1);
  CHECK(enumerate_pattern_forests({4}).size() == sft::brute_hierarchy_count(4));
  CHECK(enumerate_pattern_forests({3, 2}).size() == sft::brute_hierarchy_count(3) * sft::brute_hierarchy_count(2));
  for (const auto& f : enumerate_pattern_forests({4, 3}, 2)) CHECK(f.beta <= 2);
}

TEST_CASE("lifting terminals off the cover") {
  const Graph star = sft::star_graph(4);
  const std::vector<Vertex> center{0};
  auto l = lift_terminals_off_cover(Instance(star, make_pairs({{1, 2}})), center);
  CHECK(l.context.lift_count == 0);
  CHECK(l.instance.num_vertices() == 5);

  l = lift_terminals_off_cover(Instance(star, make_pairs({{0, 1}})), center);
  CHECK(l.context.lift_count == 1);
  CHECK(l.instance.num_vertices() == 6);
  CHECK(sf_subset_enum(l.instance).value == sf_subset_enum(Instance(star, make_pairs({{0, 1}}))).value + 1);

  const Graph c4 = sft::cycle_graph(4);
  const std::vector<Vertex> c4_cover{0, 2};
  CHECK(lift_terminals_off_cover(Instance(c4, make_pairs({{0, 2}})), c4_cover).context.lift_count == 2);
  const std::vector<Vertex> bad{0};
  CHECK_THROWS_AS(lift_terminals_off_cover(Instance(c4, {}), bad), SolverError);

  sft::Rand r(52);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = r.range(4, 9), k = r.range(1, 3);
    const Instance inst = sft::with_pairs(r, sft::planted_cover(r, n, k, 0.4), r.range(1, 3));
    std::vector<Vertex> cover(k);
    for (std::size_t i = 0; i < k; ++i) cover[i] = static_cast<Vertex>(i);
    const auto lifted = lift_terminals_off_cover(inst, cover);
    const auto a = sft::brute_sf(lifted.instance), b = sft::brute_sf(inst);
    REQUIRE(a.has_value() == b.has_value());
    if (b) CHECK(*a - lifted.context.lift_count == *b);
  }
}

TEST_CASE("vertex cover solver examples") {
  const std::vector<Vertex> center{0};
  CHECK(solve_vertex_cover_fpt(Instance(sft::star_graph(4), make_pairs({{1, 2}})), center).value == 2);
  const std::vector<Vertex> c6_cover{0, 2, 4};
  const Instance c6(sft::cycle_graph(6), make_pairs({{0, 3}}));
  CHECK(solve_vertex_cover_fpt(c6, c6_cover).value == *sft::brute_sf(c6));
  const std::vector<Vertex> not_cover{0, 2};
  CHECK_THROWS_AS(solve_vertex_cover_fpt(c6, not_cover), SolverError);
  std::vector<Vertex> huge(13);
  for (Vertex v = 0; v < 13; ++v) huge[v] = v;
  CHECK_THROWS_AS(solve_vertex_cover_fpt(Instance(sft::complete_graph(14), {}), huge), SolverError);
  const Instance split(graph_of(4, {{0, 1}, {2, 3}}), make_pairs({{1, 3}}));
  const std::vector<Vertex> split_cover{0, 2};
  CHECK_FALSE(solve_vertex_cover_fpt(split, split_cover).feasible);
}

TEST_CASE("vertex cover solver against brute force") {
  sft::Rand r(53);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = r.range(4, 10), k = r.range(1, 4);
    const Instance inst = sft::with_pairs(r, sft::planted_cover(r, n, k, 0.35), r.range(0, 4));
    if (inst.graph.num_edges() > 18) continue;
    std::vector<Vertex> cover(k);
    for (std::size_t i = 0; i < k; ++i) cover[i] = static_cast<Vertex>(i);
    const auto got = solve_vertex_cover_fpt(inst, cover);
    const auto want = sft::brute_sf(inst);
    CHECK(got.feasible == want.has_value());
    if (want) CHECK(got.value == *want);
    CHECK(sft::certificate_consistent(inst, got));
  }
}

TEST_CASE("two-deletion-set solver") {
  CHECK(solve_2ds2(Instance(sft::path_graph(8), make_pairs({{0, 7}}))).value == 7);
  CHECK_THROWS_AS(solve_2ds2(Instance(sft::path_graph(9), make_pairs({{0, 8}}))), SolverError);
  // Hubs 0 and 1 nonadjacent, joined through pieces.
  const Graph hubs = graph_of(7, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 6}});
  CHECK(solve_2ds2(Instance(hubs, make_pairs({{0, 1}}))).value == 2);
  CHECK_THROWS_AS(solve_2ds2(Instance(sft::complete_graph(6), make_pairs({{0, 1}}))), SolverError);

  sft::Rand r(54);
  for (int it = 0; it < 150; ++it) {
    const Instance inst = sft::with_pairs(r, sft::planted_two_hubs(r, r.range(3, 12), 2, 0.4), r.range(1, 4));
    if (inst.graph.num_edges() > 18) continue;
    const auto got = solve_2ds2(inst);
    CHECK(sft::same_optimum(inst, got));
    CHECK(sft::certificate_consistent(inst, got));
  }
}

TEST_CASE("extension by a few edges") {
  const Instance base(sft::path_graph(6), make_pairs({{0, 5}}));
  CHECK(solve_2ds2_extension(base, {}).value == solve_2ds2(base).value);

  // Pendant vertex 6 hung off hub 2 by the single X edge.
  const Graph with_pendant = graph_of(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 6}});
  const Instance pend(with_pendant, make_pairs({{6, 0}}));
  const std::vector<Edge> x{{2, 6}};
  CHECK(solve_2ds2_extension(pend, x).value == 3);

  sft::Rand r(55);
  int done = 0;
  for (int it = 0; it < 300 && done < 80; ++it) {
    const Graph g = sft::planted_two_hubs(r, r.range(4, 10), 2, 0.35);
    sft::EdgeSet s{g.num_vertices(), {g.edges().begin(), g.edges().end()}};
    std::vector<Edge> xs;
    for (std::size_t i = 0; i < r.range(1, 3); ++i) {
      const std::size_t a = s.fresh();
      const std::size_t b = r.below(a);
      s.add(a, b);
      xs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    const Instance inst = sft::with_pairs(r, s.graph(), r.range(1, 3));
    if (inst.graph.num_edges() > 18) continue;
    try {
      const auto got = solve_2ds2_extension(inst, xs);
      CHECK(sft::same_optimum(inst, got));
      CHECK(sft::certificate_consistent(inst, got));
      ++done;
    } catch (const SolverError& e) {
      CHECK(e.kind() == ErrorKind::precondition);
    }
  }
  CHECK(done >= 40);
}
