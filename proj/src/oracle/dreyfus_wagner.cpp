#include <algorithm>
#include <limits>
#include <map>

#include "sf/oracle.hpp"

namespace sf {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

struct Bfs {
  std::vector<std::size_t> dist;
  std::vector<Vertex> parent;  // towards the source, smallest-id choice
};

Bfs bfs_from(const Graph& g, Vertex s) {
  Bfs out;
  out.dist.assign(g.num_vertices(), kInf);
  out.parent.assign(g.num_vertices(), kNoVertex);
  std::vector<Vertex> queue{s};
  out.dist[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex y : g.neighbors(queue[i]))
      if (out.dist[y] == kInf) {
        out.dist[y] = out.dist[queue[i]] + 1;
        out.parent[y] = queue[i];
        queue.push_back(y);
      }
  return out;
}

}  // namespace

SolveResult steiner_tree_dw(const Graph& g, std::span<const Vertex> terminals_in, const OracleBudget& budget) {
  std::vector<Vertex> terms(terminals_in.begin(), terminals_in.end());
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.size() > budget.max_terminals_per_tree)
    throw SolverError(ErrorKind::guard_exceeded, "steiner_tree_dw: " + std::to_string(terms.size()) +
                                                     " terminals exceed budget " +
                                                     std::to_string(budget.max_terminals_per_tree));
  const std::size_t n = g.num_vertices();
  for (Vertex t : terms)
    if (t >= n) throw SolverError(ErrorKind::contract_violation, "steiner_tree_dw: terminal out of range");
  if (terms.size() <= 1) return SolveResult::of({});

  std::vector<Bfs> from(n);
  for (Vertex v = 0; v < n; ++v) from[v] = bfs_from(g, v);
  for (Vertex t : terms)
    if (from[terms[0]].dist[t] == kInf) return SolveResult::infeasible();

  const std::size_t k = terms.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  // dp[S][v]: cheapest tree spanning terminals S plus v. via: either a split at v
  // (split mask) or a move from vertex u (dp[S][v] = split[S][u] + dist(u, v)).
  std::vector<std::vector<std::size_t>> dp(full + 1, std::vector<std::size_t>(n, kInf));
  std::vector<std::vector<std::size_t>> split(full + 1, std::vector<std::size_t>(n, kInf));
  std::vector<std::vector<std::size_t>> split_mask(full + 1, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<Vertex>> move_from(full + 1, std::vector<Vertex>(n, kNoVertex));

  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v = 0; v < n; ++v) {
      dp[std::size_t{1} << i][v] = from[terms[i]].dist[v];
      move_from[std::size_t{1} << i][v] = terms[i];
    }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    const std::size_t low = mask & (~mask + 1);
    for (Vertex v = 0; v < n; ++v) {
      // Submasks containing the lowest bit, so each split is seen once.
      for (std::size_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        std::size_t c = dp[sub][v] + dp[mask ^ sub][v];
        if (c < split[mask][v]) {
          split[mask][v] = c;
          split_mask[mask][v] = sub;
        }
      }
    }
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u) {
        if (split[mask][u] >= kInf || from[u].dist[v] >= kInf) continue;
        std::size_t c = split[mask][u] + from[u].dist[v];
        if (c < dp[mask][v]) {
          dp[mask][v] = c;
          move_from[mask][v] = u;
        }
      }
  }

  std::vector<Edge> edges;
  auto add_path = [&](Vertex a, Vertex b) {
    // Walk from b towards a along a's BFS tree.
    const auto& tree = from[a];
    for (Vertex x = b; x != a; x = tree.parent[x]) edges.emplace_back(x, tree.parent[x]);
  };
  std::vector<std::pair<std::size_t, Vertex>> stack{{full, terms[0]}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    Vertex u = move_from[mask][v];
    add_path(u, v);
    if ((mask & (mask - 1)) == 0) continue;
    std::size_t sub = split_mask[mask][u];
    stack.emplace_back(sub, u);
    stack.emplace_back(mask ^ sub, u);
  }
  auto cert = make_certificate(std::move(edges));
  if (cert.size() != dp[full][terms[0]])
    throw SolverError(ErrorKind::contract_violation, "steiner_tree_dw: reconstruction size mismatch");
  return SolveResult::of(std::move(cert));
}

SolveResult sf_partition_oracle(const Instance& inst, const OracleBudget& budget) {
  const auto part = schools_of(inst);
  const std::size_t h = part.terminal_count;
  if (h > budget.max_schools_for_partition)
    throw SolverError(ErrorKind::guard_exceeded, "sf_partition_oracle: " + std::to_string(h) +
                                                     " schools exceed budget " +
                                                     std::to_string(budget.max_schools_for_partition));
  if (!pairs_connected(inst)) return SolveResult::infeasible();
  if (h == 0) return SolveResult::of({});

  std::map<std::size_t, SolveResult> tree_of;  // school mask -> tree
  auto tree_for = [&](std::size_t mask) -> const SolveResult& {
    auto it = tree_of.find(mask);
    if (it != tree_of.end()) return it->second;
    std::vector<Vertex> terms;
    for (std::size_t i = 0; i < h; ++i)
      if (mask >> i & 1) terms.insert(terms.end(), part.schools[i].begin(), part.schools[i].end());
    return tree_of.emplace(mask, steiner_tree_dw(inst.graph, terms, budget)).first->second;
  };

  SolveResult best;
  for_each_set_partition(h, [&](const std::vector<std::size_t>& rgs) {
    std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::size_t> masks(blocks, 0);
    for (std::size_t i = 0; i < h; ++i) masks[rgs[i]] |= std::size_t{1} << i;
    std::size_t total = 0;
    std::vector<Edge> edges;
    for (std::size_t mask : masks) {
      const SolveResult& t = tree_for(mask);
      if (!t.feasible) return false;
      total += t.value;
      edges.insert(edges.end(), t.certificate->edges.begin(), t.certificate->edges.end());
    }
    if (best.feasible && total > best.value) return false;
    auto cert = make_certificate(std::move(edges));
    // Overlapping trees are never strictly better than merging their parts, so
    // a partition whose union loses edges or closes a cycle is skipped here.
    if (cert.size() != total || !validate_solution(inst, cert)) return false;
    keep_better(best, SolveResult::of(std::move(cert)));
    return false;
  });
  return best;
}

}  // namespace sf
