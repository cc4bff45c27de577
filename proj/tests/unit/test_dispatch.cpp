#include <algorithm>
#include <functional>

#include "doctest.h"
#include "gens.hpp"
#include "oracles.hpp"
#include "sf/dispatch.hpp"

using namespace sf;
using sft::graph_of;

namespace {

using Route = std::function<SolveResult(const Instance&)>;

// Runs `route` on up to `want` generated instances inside the class and
// compares against brute force. Returns how many were checked.
int sweep(std::uint64_t seed, int want, const std::function<Graph(sft::Rand&)>& make, const Pattern& forbidden,
          const Route& route) {
  sft::Rand r(seed);
  int checked = 0;
  for (int it = 0; it < 40 * want && checked < want; ++it) {
    const Instance inst = sft::with_pairs(r, make(r), r.range(1, 4));
    if (inst.graph.num_edges() > 18 || !is_subgraph_free(inst.graph, forbidden)) continue;
    const auto got = route(inst);
    CHECK(sft::same_optimum(inst, got));
    CHECK(sft::certificate_consistent(inst, got));
    ++checked;
  }
  return checked;
}

}  // namespace

TEST_CASE("classify examples") {
  auto c5 = classify(sft::cycle_graph(5));
  CHECK(c5.max_degree_2);
  CHECK_FALSE(c5.p9);
  CHECK_FALSE(c5.s114);
  CHECK_FALSE(c5.two_claws);
  CHECK_FALSE(c5.two_claws_p3);
  CHECK_FALSE(c5.two_p4_p3);

  auto p12 = classify(sft::path_graph(12));
  REQUIRE(p12.p9);
  CHECK(p12.p9->vertex_map.size() == 9);
  CHECK(p12.forest);

  auto k5 = classify(sft::complete_graph(5));
  REQUIRE(k5.cover);
  CHECK(k5.cover->size() == 4);
  CHECK_FALSE(k5.two_claws);
}

TEST_CASE("antares") {
  const auto a = find_antares(sft::star_graph(5));
  REQUIRE(a);
  CHECK(a->hub == 0);
  CHECK(a->arms == std::array<Vertex, 3>{1, 2, 3});
  CHECK_FALSE(find_antares(sft::cycle_graph(6)));
}

TEST_CASE("shrink_cover") {
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  CHECK(shrink_cover(sft::star_graph(4), all) == std::vector<Vertex>{0});
  const std::vector<Vertex> half{0};
  CHECK_THROWS_AS(shrink_cover(sft::cycle_graph(4), half), SolverError);
}

TEST_CASE("2K13-free route") {
  CHECK(solve_2k13_free(Instance(sft::cycle_graph(7), make_pairs({{0, 4}}))).value == 3);
  CHECK(solve_2k13_free(Instance(sft::star_graph(3), make_pairs({{1, 2}}))).value == 2);
  sft::Rand r(61);
  const Instance wheel = sft::with_pairs(r, sft::wheel_like(r, 11, 7), 3);
  CHECK(sft::same_optimum(wheel, solve_2k13_free(wheel)));
  CHECK(sweep(62, 60, [](sft::Rand& q) { return sft::wheel_like(q, q.range(4, 11), 3); }, patterns::two_claws(),
              [](const Instance& i) { return solve_2k13_free(i); }) >= 40);
  CHECK(sweep(63, 60, [](sft::Rand& q) { return sft::random_connected(q, q.range(5, 11), q.range(0, 5)); },
              patterns::two_claws(), [](const Instance& i) { return solve_2k13_free(i); }) >= 40);
}

TEST_CASE("2K13+P3-free route") {
  CHECK(solve_2k13_p3_free(Instance(sft::cycle_graph(7), make_pairs({{0, 4}}))).value == 3);
  sft::Rand r(64);
  const Instance none(sft::two_claws_attached(r, 3), {});
  if (is_subgraph_free(none.graph, patterns::two_claws_p3())) CHECK(solve_2k13_p3_free(none).value == 0);
  CHECK(sweep(65, 60, [](sft::Rand& q) { return sft::two_claws_attached(q, q.range(0, 4)); },
              patterns::two_claws_p3(), [](const Instance& i) { return solve_2k13_p3_free(i); }) >= 40);
}

TEST_CASE("S114-free route") {
  CHECK(solve_s114_free(Instance(sft::cycle_graph(8), make_pairs({{0, 3}}))).value == 3);
  const Instance star(sft::star_graph(5), make_pairs({{1, 2}, {3, 4}}));
  CHECK(solve_s114_free(star).value == sf_on_forest(star).value);
  CHECK(sweep(66, 60, [](sft::Rand& q) { return sft::spider_planted(q, q.range(0, 5), 0.3); }, patterns::s114(),
              [](const Instance& i) { return solve_s114_free(i); }) >= 40);
}

TEST_CASE("P9-free route") {
  CHECK(solve_p9_free(Instance(sft::path_graph(8), make_pairs({{0, 7}}))).value == 7);
  CHECK(solve_p9_free(Instance(sft::cycle_graph(8), make_pairs({{0, 4}}))).value == 4);
  CHECK(sweep(67, 40, sft::p8_with_hubs, Pattern::path(9), [](const Instance& i) { return solve_p9_free(i); }) >= 30);
  CHECK(sweep(68, 60, [](sft::Rand& q) { return sft::random_connected(q, q.range(5, 10), q.range(1, 6)); },
              Pattern::path(9), [](const Instance& i) { return solve_p9_free(i); }) >= 40);
  std::vector<Edge> chorded = sft::cycle_graph(9).edges();
  chorded.emplace_back(0, 4);
  CHECK_THROWS_AS(solve_p9_free(Instance(Graph(9, chorded), make_pairs({{1, 6}}))), SolverError);
}

TEST_CASE("2P4+P3-free route") {
  CHECK(solve_2p4_p3_free(Instance(sft::path_graph(8), make_pairs({{0, 7}}))).value == 7);
  CHECK(solve_2p4_p3_free(Instance(sft::path_graph(9), {})).value == 0);
  CHECK(sweep(69, 60, [](sft::Rand& q) { return sft::p9_with_pendants(q, q.range(0, 4)); }, patterns::two_p4_p3(),
              [](const Instance& i) { return solve_2p4_p3_free(i); }) >= 40);
}

TEST_CASE("sP2 peel") {
  // Two claws and an edge: the image of the claws covers what is left.
  const Graph claws = graph_of(10, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}, {1, 8}, {5, 9}});
  const Instance inst(claws, make_pairs({{8, 9}, {2, 6}}));
  const InstanceSolver never = [](const Instance&) -> SolveResult {
    throw SolverError(ErrorKind::precondition, "base called");
  };
  if (is_subgraph_free(claws, Pattern::plus_p2(patterns::two_claws(), 1))) {
    const auto got = solve_sp2_peel(inst, patterns::two_claws(), 1, never);
    CHECK(sft::same_optimum(inst, got));
  }
  const InstanceSolver base = [](const Instance& i) { return solve_2k13_free(i); };
  const Instance free(sft::cycle_graph(6), make_pairs({{0, 3}}));
  CHECK(solve_sp2_peel(free, patterns::two_claws(), 1, base).value == 3);

  const auto menu = peel_menu();
  CHECK(menu.size() == 4);
  sft::Rand r(70);
  int checked = 0;
  for (int it = 0; it < 600 && checked < 60; ++it) {
    const Instance rnd = sft::with_pairs(r, sft::random_connected(r, r.range(8, 13), r.range(0, 4)), r.range(1, 3));
    if (rnd.graph.num_edges() > 18) continue;
    const Pattern& H = patterns::two_claws();
    if (!is_subgraph_free(rnd.graph, Pattern::plus_p2(H, 1)) || is_subgraph_free(rnd.graph, H)) continue;
    const auto got = solve_sp2_peel(rnd, H, 1, base);
    CHECK(sft::same_optimum(rnd, got));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("router") {
  const Instance tree(graph_of(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}), make_pairs({{0, 4}}));
  CHECK(solve(tree).route == "forest");
  CHECK(solve(Instance(sft::cycle_graph(9), make_pairs({{0, 4}}))).route == "degree-2");

  sft::Rand r(71);
  const Instance planted = sft::with_pairs(r, sft::planted_cover(r, 100, 6, 0.1), 3);
  const auto routed = solve(planted);
  CHECK(routed.route == "vertex-cover-fpt");
  const auto want = sf_partition_oracle(planted);
  CHECK(routed.result.feasible == want.feasible);
  CHECK(routed.result.value == want.value);
  CHECK(validate_solution(planted, *routed.result.certificate));

  std::vector<Pair> many;
  for (Vertex v = 0; v < 16; v += 2) many.emplace_back(v, v + 1);
  try {
    solve(Instance(sft::complete_graph(16), many));
    FAIL("expected UNSUPPORTED");
  } catch (const SolverError& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }

  const auto names = route_names();
  CHECK(std::find(names.begin(), names.end(), "oracle") != names.end());
  CHECK_THROWS_AS(solve(tree, {}, "no-such-route"), SolverError);
}

TEST_CASE("routes agree where several apply") {
  sft::Rand r(72);
  for (int it = 0; it < 80; ++it) {
    const Instance inst = sft::with_pairs(r, sft::random_connected(r, r.range(5, 10), r.range(0, 5)), r.range(1, 3));
    if (inst.graph.num_edges() > 18) continue;
    const auto want = sft::brute_sf(inst);
    for (const auto& name : route_names()) {
      try {
        const auto got = solve(inst, {}, name).result;
        CHECK(sft::same_optimum(inst, got));
      } catch (const SolverError&) {
        // route does not apply to this instance
      }
    }
    CHECK(solve(inst).result.value == want.value_or(0));
  }
}
