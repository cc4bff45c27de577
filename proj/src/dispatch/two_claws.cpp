#include <algorithm>
#include <set>

#include "sf/dispatch.hpp"
#include "sf/fpt.hpp"

namespace sf {

std::optional<Antares> find_antares(const Graph& g) {
  if (g.num_vertices() == 0 || g.max_degree() < 3) return std::nullopt;
  Antares a;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (a.hub == kNoVertex || g.degree(v) > g.degree(a.hub)) a.hub = v;
  const auto& nb = g.neighbors(a.hub);
  std::copy(nb.begin(), nb.begin() + 3, a.arms.begin());
  return a;
}

namespace {

// Apex whose removal leaves disjoint paths, if any.
std::optional<Vertex> fan_apex(const Graph& g) {
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (g.degree(w) < 3) continue;
    const Vertex drop[1] = {w};
    GraphEdit rest = delete_vertices(g, drop);
    if (rest.graph.max_degree() <= 2 && is_acyclic(rest.graph)) return w;
  }
  return std::nullopt;
}

SolveResult branch_block(const Instance& b, const Limits& limits) {
  if (b.graph.max_degree() <= 2) return sf_on_cycle_path_union(b);
  if (auto apex = fan_apex(b.graph)) return sf_on_fan(b, *apex);
  return solve_bounded_two_paths(b, limits.two_path_guard);
}

// Hub edges kept on one path p_0..p_m of G - A: those strictly between the
// guessed first and last solution subpaths, plus the chosen hub edge of each.
std::vector<std::vector<Vertex>> kept_options(const Graph& g, Vertex hub, const std::vector<Vertex>& path) {
  const std::size_t m = path.size();
  std::vector<std::size_t> touch;
  for (std::size_t j = 0; j < m; ++j)
    if (g.has_edge(hub, path[j])) touch.push_back(j);
  std::set<std::vector<Vertex>> out;
  out.insert({});  // no solution vertex on the path
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<Vertex> middle;
      for (std::size_t j : touch)
        if (x < j && j < y) middle.push_back(path[j]);
      std::vector<std::ptrdiff_t> first{-1}, last{-1};
      for (std::size_t j : touch) {
        if (j <= x) first.push_back(static_cast<std::ptrdiff_t>(j));
        if (j >= y) last.push_back(static_cast<std::ptrdiff_t>(j));
      }
      for (auto f1 : first)
        for (auto f2 : last) {
          std::vector<Vertex> kept = middle;
          if (f1 >= 0) kept.push_back(path[f1]);
          if (f2 >= 0) kept.push_back(path[f2]);
          std::sort(kept.begin(), kept.end());
          kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
          out.insert(std::move(kept));
        }
    }
  return {out.begin(), out.end()};
}

SolveResult two_claw_block(const Instance& b, const Limits& limits) {
  const Graph& g = b.graph;
  if (g.max_degree() <= 2) return sf_on_cycle_path_union(b);
  const Antares a = *find_antares(g);
  if (g.degree(a.hub) <= 6) return solve_bounded_two_paths(b, limits.two_path_guard);

  std::vector<bool> in_a(g.num_vertices(), false);
  in_a[a.hub] = true;
  for (Vertex x : a.arms) in_a[x] = true;
  // G - A splits into paths touching the arms only at their ends.
  std::vector<std::vector<Vertex>> paths;
  std::vector<bool> seen = in_a;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex y : g.neighbors(comp[i]))
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
    auto inner_degree = [&](Vertex x) {
      return std::count_if(g.neighbors(x).begin(), g.neighbors(x).end(), [&](Vertex y) { return !in_a[y]; });
    };
    Vertex start = kNoVertex;
    std::size_t edges = 0;
    for (Vertex x : comp) {
      const auto d = static_cast<std::size_t>(inner_degree(x));
      if (d > 2) throw SolverError(ErrorKind::precondition, "solve_2k13_free: graph contains 2K13");
      edges += d;
      if (d <= 1 && (start == kNoVertex || x < start)) start = x;
    }
    if (start == kNoVertex || edges / 2 != comp.size() - 1)
      throw SolverError(ErrorKind::precondition, "solve_2k13_free: graph contains 2K13");
    std::vector<Vertex> path{start};
    while (path.size() < comp.size())
      for (Vertex y : g.neighbors(path.back()))
        if (!in_a[y] && (path.size() < 2 || y != path[path.size() - 2])) {
          path.push_back(y);
          break;
        }
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      for (Vertex arm : a.arms)
        if (g.has_edge(arm, path[i]))
          throw SolverError(ErrorKind::precondition, "solve_2k13_free: graph contains 2K13");
    paths.push_back(std::move(path));
  }

  std::vector<std::vector<std::vector<Vertex>>> options;
  std::size_t total = 1;
  for (const auto& p : paths) {
    options.push_back(kept_options(g, a.hub, p));
    total *= options.back().size();
    if (total > limits.two_claw_branches)
      throw SolverError(ErrorKind::guard_exceeded, "solve_2k13_free: more than " +
                                                       std::to_string(limits.two_claw_branches) +
                                                       " antares branches; try the oracle");
  }

  std::vector<SolveResult> results(total);
  auto run = [&](std::size_t index) {
    std::vector<Edge> removed;
    std::size_t rest = index;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto& kept = options[i][rest % options[i].size()];
      rest /= options[i].size();
      for (Vertex x : paths[i])
        if (g.has_edge(a.hub, x) && !std::binary_search(kept.begin(), kept.end(), x)) removed.emplace_back(a.hub, x);
    }
    DerivedInstance d = derive(delete_edges(g, removed), b.pairs);
    results[index] = lift_result(d, solve_via_blocks(d.instance, [&](const Instance& c) { return branch_block(c, limits); }));
  };
  parallel_for(total, limits.exec, run);
  SolveResult best;
  for (const SolveResult& r : results) keep_better(best, r);
  return best;
}

}  // namespace

SolveResult solve_2k13_free(const Instance& inst, const Limits& limits) {
  if (inst.graph.max_degree() <= 2) return sf_on_cycle_path_union(inst);
  return solve_via_blocks(inst, [&](const Instance& b) { return two_claw_block(b, limits); });
}

namespace {

SolveResult two_claw_p3_block(const Instance& b, const Limits& limits) {
  const Graph& g = b.graph;
  auto h = find_embedding(g, patterns::two_claws());
  if (!h) return solve_2k13_free(b, limits);
  // X(D): every edge touching a component of G - D with more than two
  // vertices. The claw roots qualify; any pair with fewer such edges does too.
  auto crossing = [&](const std::vector<Vertex>& D) {
    std::vector<bool> blocked(g.num_vertices(), false), seen(g.num_vertices(), false);
    for (Vertex r : D) seen[r] = true;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = true;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (Vertex y : g.neighbors(comp[i]))
          if (!seen[y]) {
            seen[y] = true;
            comp.push_back(y);
          }
      if (comp.size() > 2)
        for (Vertex x : comp) blocked[x] = true;
    }
    std::vector<Edge> X;
    for (const Edge& e : g.edges())
      if (blocked[e.u] || blocked[e.v]) X.push_back(e);
    return X;
  };
  std::vector<Vertex> roots = {std::min(h->vertex_map[0], h->vertex_map[4]),
                               std::max(h->vertex_map[0], h->vertex_map[4])};
  std::vector<Edge> X = crossing(roots);
  for (Vertex a = 0; a < g.num_vertices(); ++a)
    for (Vertex c = a + 1; c < g.num_vertices(); ++c) {
      std::vector<Edge> other = crossing({a, c});
      if (other.size() < X.size()) {
        X = std::move(other);
        roots = {a, c};
      }
    }
  // Outside the claws every component must be a P3-free piece.
  std::vector<Vertex> claw_vertices(h->vertex_map.begin(), h->vertex_map.end());
  GraphEdit rest = delete_vertices(g, claw_vertices);
  std::vector<std::size_t> comp_of;
  std::vector<std::size_t> comp_size(connected_components(rest.graph, comp_of), 0);
  for (std::size_t c : comp_of) ++comp_size[c];
  for (std::size_t size : comp_size)
    if (size > 2) throw SolverError(ErrorKind::precondition, "solve_2k13_p3_free: graph contains 2K13+P3");
  if (!is_c_deletion_set(delete_edges(g, X).graph, 2, roots))
    throw SolverError(ErrorKind::contract_violation, "solve_2k13_p3_free: chosen pair is not a 2-deletion set of G - X");
  return solve_2ds2_extension(b, X);
}

}  // namespace

SolveResult solve_2k13_p3_free(const Instance& inst, const Limits& limits) {
  return solve_via_blocks(inst, [&](const Instance& b) { return two_claw_p3_block(b, limits); });
}

}  // namespace sf
