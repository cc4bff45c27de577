#include <algorithm>

#include "sf/kernels.hpp"

namespace sf {

SolveResult solve_per_component(const Instance& inst, const InstanceSolver& inner) {
  if (!pairs_connected(inst)) return SolveResult::infeasible();
  std::vector<std::size_t> comp;
  const std::size_t count = connected_components(inst.graph, comp);
  if (count <= 1) return inst.pairs.empty() ? SolveResult::of({}) : inner(inst);

  std::vector<std::vector<Vertex>> members(count);
  std::vector<bool> has_pair(count, false);
  for (Vertex v = 0; v < inst.num_vertices(); ++v) members[comp[v]].push_back(v);
  for (const Pair& p : inst.pairs) has_pair[comp[p.u]] = true;

  std::vector<Edge> edges;
  for (std::size_t c = 0; c < count; ++c) {
    if (!has_pair[c]) continue;
    std::vector<Pair> local;
    for (const Pair& p : inst.pairs)
      if (comp[p.u] == c) local.push_back(p);
    DerivedInstance d = derive(induced_subgraph(inst.graph, members[c]), local);
    SolveResult r = lift_result(d, inner(d.instance));
    if (!r.feasible) return r;
    edges.insert(edges.end(), r.certificate->edges.begin(), r.certificate->edges.end());
  }
  return SolveResult::of(make_certificate(std::move(edges)));
}

SolveResult sf_on_forest(const Instance& inst) {
  const Graph& g = inst.graph;
  if (!is_acyclic(g)) throw SolverError(ErrorKind::precondition, "sf_on_forest: graph has a cycle");
  if (!pairs_connected(inst)) return SolveResult::infeasible();
  const std::size_t n = g.num_vertices();
  // Root every tree, then walk each pair up to its meeting point.
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::vector<Vertex> queue{r};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : g.neighbors(queue[i]))
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = queue[i];
          depth[y] = depth[queue[i]] + 1;
          queue.push_back(y);
        }
  }
  std::vector<bool> used(n, false);  // edge (v, parent[v]) is taken
  for (const Pair& p : inst.pairs) {
    Vertex a = p.u, b = p.v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      used[a] = true;
      a = parent[a];
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    if (used[v]) edges.emplace_back(v, parent[v]);
  return SolveResult::of(make_certificate(std::move(edges)));
}

SolveResult sf_on_cycle_path_union(const Instance& inst) {
  if (inst.graph.max_degree() > 2)
    throw SolverError(ErrorKind::precondition, "sf_on_cycle_path_union: vertex of degree > 2");
  return solve_per_component(inst, [](const Instance& c) {
    if (is_acyclic(c.graph)) return sf_on_forest(c);
    SolveResult best;
    for (const Edge& e : c.graph.edges()) {
      const Edge cut[1] = {e};
      DerivedInstance d = derive(delete_edges(c.graph, cut), c.pairs);
      keep_better(best, lift_result(d, sf_on_forest(d.instance)));
    }
    return best;
  });
}

}  // namespace sf
