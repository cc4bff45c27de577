#include <algorithm>

#include "sf/dispatch.hpp"
#include "sf/fpt.hpp"

namespace sf {

std::vector<Vertex> shrink_cover(const Graph& g, const std::vector<Vertex>& seed) {
  if (!is_vertex_cover(g, seed)) throw SolverError(ErrorKind::precondition, "shrink_cover: seed is not a vertex cover");
  return *minimum_vertex_cover(g, seed.size());
}

namespace {

SolveResult by_cover(const Instance& b, const std::vector<Vertex>& seed, const Limits& limits) {
  const auto cover = shrink_cover(b.graph, seed);
  return solve_vertex_cover_fpt(b, cover, limits.exec);
}

SolveResult s114_block(const Instance& b, const Limits& limits) {
  const Graph& g = b.graph;
  if (g.max_degree() <= 2) return solve_2k13_free(b, limits);
  auto s112 = find_embedding(g, Pattern::subdivided_claw(1, 1, 2));
  if (!s112) {
    // A claw and nothing reaching past its leaves: at most four vertices.
    if (g.num_vertices() > 4) throw SolverError(ErrorKind::precondition, "solve_s114_free: S112-free block too large");
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return by_cover(b, all, limits);
  }
  auto s113 = find_embedding(g, Pattern::subdivided_claw(1, 1, 3));
  // Pattern order: centre, the two short legs, then the long leg outwards.
  if (!s113) {
    const auto& m = s112->vertex_map;
    return by_cover(b, {m[0], m[1], m[2], m[3], m[4]}, limits);
  }
  const auto& m = s113->vertex_map;
  std::vector<Vertex> cover = {m[0], m[1], m[2], m[3], m[4]};
  std::vector<Vertex> removed = {m[0], m[1], m[2], m[3], m[4], m[5]};
  GraphEdit rest = delete_vertices(g, removed);
  std::vector<std::size_t> comp_of;
  std::vector<std::size_t> comp_size(connected_components(rest.graph, comp_of), 0);
  for (std::size_t c : comp_of) ++comp_size[c];
  std::vector<Vertex> back(rest.graph.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (rest.vertex_map[v] != kNoVertex) back[rest.vertex_map[v]] = v;
  for (Vertex x = 0; x < rest.graph.num_vertices(); ++x) {
    if (comp_size[comp_of[x]] > 3) throw SolverError(ErrorKind::precondition, "solve_s114_free: graph contains S114");
    if (comp_size[comp_of[x]] >= 2) cover.push_back(back[x]);
  }
  std::sort(cover.begin(), cover.end());
  return by_cover(b, cover, limits);
}

SolveResult p9_block(const Instance& b, const Limits& limits) {
  const Graph& g = b.graph;
  const LongestPath lp = longest_path_up_to(g, 9);
  if (lp.capped) throw SolverError(ErrorKind::precondition, "solve_p9_free: graph contains P9");
  if (lp.vertices <= 5) return solve_s114_free(b, limits);
  std::vector<Vertex> path = lp.path;
  std::sort(path.begin(), path.end());
  if (lp.vertices <= 7 || is_vertex_cover(g, path)) return by_cover(b, path, limits);
  if (!c_deletion_set(g, 2, 2))
    throw SolverError(ErrorKind::precondition, "solve_p9_free: no small cover or 2-deletion set in a P9-free block");
  return solve_2ds2(b);
}

SolveResult two_p4_p3_block(const Instance& b, const Limits& limits) {
  auto p9 = find_embedding(b.graph, Pattern::path(9));
  if (!p9) return solve_p9_free(b, limits);
  std::vector<Vertex> path = p9->vertex_map;
  std::sort(path.begin(), path.end());
  if (!is_vertex_cover(b.graph, path))
    throw SolverError(ErrorKind::precondition, "solve_2p4_p3_free: graph contains " + patterns::two_p4_p3().name());
  return by_cover(b, path, limits);
}

}  // namespace

SolveResult solve_s114_free(const Instance& inst, const Limits& limits) {
  return solve_via_blocks(inst, [&](const Instance& b) { return s114_block(b, limits); });
}

SolveResult solve_p9_free(const Instance& inst, const Limits& limits) {
  return solve_via_blocks(inst, [&](const Instance& b) { return p9_block(b, limits); });
}

SolveResult solve_2p4_p3_free(const Instance& inst, const Limits& limits) {
  return solve_via_blocks(inst, [&](const Instance& b) { return two_p4_p3_block(b, limits); });
}

SolveResult solve_sp2_peel(const Instance& inst, const Pattern& H, std::size_t s, const InstanceSolver& base,
                           const Limits& limits) {
  const Pattern& inner = H.core();
  for (std::size_t t = s; t > 0; --t) {
    const Pattern probe = t == 1 ? inner : Pattern::plus_p2(inner, t - 1);
    auto emb = find_embedding(inst.graph, probe, probe.vertex_count());
    if (!emb) continue;
    // Without a further disjoint edge the image touches every edge.
    std::vector<Vertex> image = emb->vertex_map;
    std::sort(image.begin(), image.end());
    if (!is_vertex_cover(inst.graph, image))
      throw SolverError(ErrorKind::precondition, "solve_sp2_peel: graph contains " + Pattern::plus_p2(inner, t).name());
    return by_cover(inst, image, limits);
  }
  return base(inst);
}

std::vector<Pattern> peel_menu() {
  return {patterns::two_claws_p3(), patterns::two_p4_p3(), Pattern::path(9), patterns::s114()};
}

namespace {

InstanceSolver base_for(std::size_t menu_index, const Limits& limits) {
  switch (menu_index) {
    case 0: return [limits](const Instance& i) { return solve_2k13_p3_free(i, limits); };
    case 1: return [limits](const Instance& i) { return solve_2p4_p3_free(i, limits); };
    case 2: return [limits](const Instance& i) { return solve_p9_free(i, limits); };
    default: return [limits](const Instance& i) { return solve_s114_free(i, limits); };
  }
}

std::optional<std::size_t> peel_depth(const Graph& g, const Pattern& H, std::size_t max_s) {
  for (std::size_t s = 0; s <= max_s; ++s) {
    const Pattern p = s == 0 ? H : Pattern::plus_p2(H, s);
    if (is_subgraph_free(g, p, p.vertex_count())) return s;
  }
  return std::nullopt;
}

}  // namespace

ClassReport classify(const Graph& g, const Limits& limits) {
  ClassReport r;
  r.max_degree_2 = g.max_degree() <= 2;
  r.forest = is_acyclic(g);
  r.p9 = find_embedding(g, Pattern::path(9));
  r.s114 = find_embedding(g, patterns::s114());
  r.two_claws = find_embedding(g, patterns::two_claws());
  r.two_claws_p3 = find_embedding(g, patterns::two_claws_p3());
  r.two_p4_p3 = find_embedding(g, patterns::two_p4_p3());
  r.cover = minimum_vertex_cover(g, limits.vertex_cover);
  r.deletion_set = c_deletion_set(g, 2, 2);
  for (const Pattern& H : peel_menu()) r.peel.emplace_back(H.name(), peel_depth(g, H, limits.peel_depth));
  return r;
}

std::vector<std::string> route_names() {
  return {"forest", "degree2", "vc", "2ds2", "p9", "s114", "2k13", "2k13p3", "2p4p3", "peel", "oracle"};
}

namespace {

SolveResult via_cover_route(const Instance& inst, std::size_t bound, const Limits& limits) {
  auto cover = minimum_vertex_cover(inst.graph, bound);
  if (!cover) throw SolverError(ErrorKind::precondition, "vertex cover larger than " + std::to_string(bound));
  return solve_vertex_cover_fpt(inst, *cover, limits.exec);
}

SolveResult oracle_route(const Instance& inst, const Limits& limits) {
  OracleBudget budget;
  budget.max_edges_for_subset_enum = limits.oracle_edges;
  if (inst.graph.num_edges() <= limits.oracle_edges) return sf_subset_enum(inst, budget, limits.exec);
  return sf_partition_oracle(inst, budget);
}

// First menu pattern H and depth s with G (H + sP2)-free, s >= 1.
std::optional<std::pair<std::size_t, std::size_t>> find_peel(const Graph& g, const Limits& limits) {
  const auto menu = peel_menu();
  for (std::size_t s = 1; s <= limits.peel_depth; ++s)
    for (std::size_t i = 0; i < menu.size(); ++i) {
      const Pattern p = Pattern::plus_p2(menu[i], s);
      if (is_subgraph_free(g, p, p.vertex_count())) return std::make_pair(i, s);
    }
  return std::nullopt;
}

}  // namespace

Routed solve(const Instance& inst, const Limits& limits, const std::string& route) {
  const Graph& g = inst.graph;
  if (route != "auto") {
    if (route == "forest") return {sf_on_forest(inst), "forest"};
    if (route == "degree2") return {sf_on_cycle_path_union(inst), "degree-2"};
    if (route == "vc") return {via_cover_route(inst, kCoverGuard, limits), "vertex-cover-fpt"};
    if (route == "2ds2") return {solve_2ds2(inst), "2-deletion-set"};
    if (route == "p9") return {solve_p9_free(inst, limits), "p9-free"};
    if (route == "s114") return {solve_s114_free(inst, limits), "s114-free"};
    if (route == "2k13") return {solve_2k13_free(inst, limits), "2k13-free"};
    if (route == "2k13p3") return {solve_2k13_p3_free(inst, limits), "2k13+p3-free"};
    if (route == "2p4p3") return {solve_2p4_p3_free(inst, limits), "2p4+p3-free"};
    if (route == "oracle") return {oracle_route(inst, limits), "oracle"};
    if (route == "peel") {
      auto peel = find_peel(g, limits);
      if (!peel) throw SolverError(ErrorKind::precondition, "no H + sP2 class with s <= " + std::to_string(limits.peel_depth));
      const Pattern H = peel_menu()[peel->first];
      return {solve_sp2_peel(inst, H, peel->second, base_for(peel->first, limits), limits),
              H.name() + "+sP2-peel"};
    }
    throw SolverError(ErrorKind::contract_violation, "unknown route '" + route + "'");
  }

  std::vector<std::string> guards;
  auto attempt = [&](auto&& fn) -> std::optional<SolveResult> {
    try {
      return fn();
    } catch (const SolverError& e) {
      if (e.kind() != ErrorKind::guard_exceeded) throw;
      guards.emplace_back(e.what());
      return std::nullopt;
    }
  };

  if (is_acyclic(g)) return {sf_on_forest(inst), "forest"};
  if (g.max_degree() <= 2) return {sf_on_cycle_path_union(inst), "degree-2"};
  if (auto cover = minimum_vertex_cover(g, limits.vertex_cover)) {
    if (auto r = attempt([&] { return solve_vertex_cover_fpt(inst, *cover, limits.exec); }))
      return {*r, "vertex-cover-fpt"};
  } else {
    guards.push_back("vertex cover > " + std::to_string(limits.vertex_cover));
  }
  if (c_deletion_set(g, 2, 2)) return {solve_2ds2(inst), "2-deletion-set"};
  if (!longest_path_up_to(g, 9).capped)
    if (auto r = attempt([&] { return solve_p9_free(inst, limits); })) return {*r, "p9-free"};
  if (is_subgraph_free(g, patterns::s114()))
    if (auto r = attempt([&] { return solve_s114_free(inst, limits); })) return {*r, "s114-free"};
  if (is_subgraph_free(g, patterns::two_claws())) {
    if (auto r = attempt([&] { return solve_2k13_free(inst, limits); })) return {*r, "2k13-free"};
  } else if (is_subgraph_free(g, patterns::two_claws_p3())) {
    if (auto r = attempt([&] { return solve_2k13_p3_free(inst, limits); })) return {*r, "2k13+p3-free"};
  }
  if (is_subgraph_free(g, patterns::two_p4_p3()))
    if (auto r = attempt([&] { return solve_2p4_p3_free(inst, limits); })) return {*r, "2p4+p3-free"};
  if (auto peel = find_peel(g, limits)) {
    const Pattern H = peel_menu()[peel->first];
    if (auto r = attempt([&] { return solve_sp2_peel(inst, H, peel->second, base_for(peel->first, limits), limits); }))
      return {*r, H.name() + "+sP2-peel"};
  }
  if (auto r = attempt([&] { return oracle_route(inst, limits); })) return {*r, "oracle"};
  std::string why = "no route applies";
  if (!guards.empty()) why += "; first guard hit: " + guards.front();
  throw SolverError(ErrorKind::unsupported, why);
}

}  // namespace sf
