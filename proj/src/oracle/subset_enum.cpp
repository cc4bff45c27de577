#include <algorithm>
#include <optional>

#include "sf/oracle.hpp"

namespace sf {

namespace {

std::vector<Vertex> bfs_path(const Graph& g, Vertex s, Vertex t) {
  std::vector<Vertex> parent(g.num_vertices(), kNoVertex);
  std::vector<Vertex> queue{s};
  parent[s] = s;
  for (std::size_t i = 0; i < queue.size() && parent[t] == kNoVertex; ++i)
    for (Vertex y : g.neighbors(queue[i]))
      if (parent[y] == kNoVertex) {
        parent[y] = queue[i];
        queue.push_back(y);
      }
  if (parent[t] == kNoVertex) return {};
  std::vector<Vertex> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  return path;
}

// Checks one candidate edge set given by indices into g.edges().
bool feasible_subset(const Instance& inst, const std::vector<std::size_t>& pick, UnionFind& uf) {
  const auto& edges = inst.graph.edges();
  bool ok = true;
  for (std::size_t i : pick)
    if (!uf.unite(edges[i].u, edges[i].v)) {
      ok = false;
      break;
    }
  if (ok)
    for (const Pair& p : inst.pairs)
      if (!uf.same(p.u, p.v)) {
        ok = false;
        break;
      }
  return ok;
}

// First feasible k-subset in lexicographic order among those whose smallest index is `first`.
std::optional<std::vector<std::size_t>> first_in_chunk(const Instance& inst, std::size_t m, std::size_t first,
                                                       std::size_t k) {
  const std::size_t n = inst.graph.num_vertices();
  std::vector<std::size_t> pick{first};
  const std::size_t rest = k - 1;
  const std::size_t lo = first + 1;
  if (m - lo < rest) return std::nullopt;
  std::vector<std::size_t> idx(rest);
  for (std::size_t i = 0; i < rest; ++i) idx[i] = lo + i;
  while (true) {
    pick.resize(1);
    pick.insert(pick.end(), idx.begin(), idx.end());
    UnionFind uf(n);
    if (feasible_subset(inst, pick, uf)) return pick;
    // Next combination in lexicographic order.
    std::size_t i = rest;
    while (i > 0 && idx[i - 1] == m - rest + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < rest; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t school_lower_bound(const Instance& inst) {
  auto schools = schools_of(inst);
  std::size_t lb = 0;
  for (std::size_t i = 0; i < schools.terminal_count; ++i) lb += schools.schools[i].size() - 1;
  return lb;
}

}  // namespace

SolveResult greedy_forest(const Instance& inst) {
  if (!pairs_connected(inst)) return SolveResult::infeasible();
  std::vector<Edge> chosen;
  UnionFind uf(inst.graph.num_vertices());
  for (const Pair& p : inst.pairs) {
    auto path = bfs_path(inst.graph, p.u, p.v);
    for (std::size_t i = 1; i < path.size(); ++i)
      if (uf.unite(path[i - 1], path[i])) chosen.emplace_back(path[i - 1], path[i]);
  }
  return SolveResult::of(make_certificate(std::move(chosen)));
}

SolveResult sf_subset_enum(const Instance& inst, const OracleBudget& budget, Exec exec) {
  const std::size_t m = inst.graph.num_edges();
  if (m > budget.max_edges_for_subset_enum)
    throw SolverError(ErrorKind::guard_exceeded, "sf_subset_enum: " + std::to_string(m) + " edges exceed budget " +
                                                     std::to_string(budget.max_edges_for_subset_enum));
  SolveResult greedy = greedy_forest(inst);
  if (!greedy.feasible) return greedy;
  if (inst.pairs.empty()) return SolveResult::of({});
  const std::size_t ub = greedy.value;
  for (std::size_t k = std::max<std::size_t>(school_lower_bound(inst), 1); k <= ub; ++k) {
    std::optional<std::vector<std::size_t>> found;
    if (exec == Exec::serial) {
      for (std::size_t first = 0; first < m && !found; ++first) found = first_in_chunk(inst, m, first, k);
    } else {
      std::vector<std::optional<std::vector<std::size_t>>> per_chunk(m);
      parallel_for(m, Exec::parallel, [&](std::size_t first) { per_chunk[first] = first_in_chunk(inst, m, first, k); });
      for (auto& c : per_chunk)
        if (c) {
          found = std::move(c);
          break;
        }
    }
    if (found) {
      std::vector<Edge> edges;
      for (std::size_t i : *found) edges.push_back(inst.graph.edges()[i]);
      return SolveResult::of(make_certificate(std::move(edges)));
    }
  }
  // The greedy forest has ub edges and is feasible, so the loop always returns.
  throw SolverError(ErrorKind::contract_violation, "sf_subset_enum: no forest of greedy size found");
}

}  // namespace sf
