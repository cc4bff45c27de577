#include <algorithm>
#include <limits>

#include "sf/kernels.hpp"

namespace sf {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

// Orders the vertices of a linear forest path by path; `breaks[i]` is true when
// order[i-1] and order[i] are not adjacent.
bool linear_order(const Graph& g, Vertex apex, std::vector<Vertex>& order, std::vector<bool>& breaks) {
  const std::size_t n = g.num_vertices();
  auto deg = [&](Vertex x) {
    std::size_t d = 0;
    for (Vertex y : g.neighbors(x))
      if (y != apex) ++d;
    return d;
  };
  std::vector<bool> seen(n, false);
  seen[apex] = true;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    if (deg(s) > 2) return false;
    if (deg(s) == 2) continue;
    Vertex prev = kNoVertex, cur = s;
    breaks.push_back(true);
    while (true) {
      seen[cur] = true;
      order.push_back(cur);
      Vertex next = kNoVertex;
      for (Vertex y : g.neighbors(cur))
        if (y != apex && y != prev) next = y;
      if (next == kNoVertex) break;
      if (seen[next] || deg(next) > 2) return false;
      breaks.push_back(false);
      prev = cur;
      cur = next;
    }
  }
  // Anything unseen lies on a cycle.
  return order.size() + 1 == n;
}

}  // namespace

SolveResult sf_on_fan(const Instance& inst, Vertex apex) {
  const Graph& g = inst.graph;
  const std::size_t n = g.num_vertices();
  if (apex >= n) throw SolverError(ErrorKind::precondition, "sf_on_fan: apex out of range");
  std::vector<Vertex> order;
  std::vector<bool> breaks;
  if (!linear_order(g, apex, order, breaks))
    throw SolverError(ErrorKind::precondition, "sf_on_fan: graph minus apex is not a union of paths");
  if (!pairs_connected(inst)) return SolveResult::infeasible();

  const std::size_t len = order.size();
  std::vector<std::size_t> pos(n, kInf);
  for (std::size_t i = 0; i < len; ++i) pos[order[i]] = i;

  // School id per vertex; schools touching the apex are never closed on the path.
  UnionFind uf(n);
  for (const Pair& p : inst.pairs) uf.unite(p.u, p.v);
  const auto terminal = inst.terminal_mask();
  std::vector<std::size_t> school_size(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (terminal[v]) ++school_size[uf.find(v)];
  const std::size_t apex_school = terminal[apex] ? uf.find(apex) : kInf;

  // closed(i, j): every school met in order[i..j] lies entirely inside it.
  auto closed = [&](std::size_t i, std::size_t j) {
    std::vector<std::size_t> count(n, 0);
    for (std::size_t k = i; k <= j; ++k)
      if (terminal[order[k]]) ++count[uf.find(order[k])];
    for (std::size_t k = i; k <= j; ++k) {
      if (!terminal[order[k]]) continue;
      std::size_t s = uf.find(order[k]);
      if (s == apex_school || count[s] != school_size[s]) return false;
    }
    return true;
  };
  auto apex_hook = [&](std::size_t i, std::size_t j) -> Vertex {
    for (std::size_t k = i; k <= j; ++k)
      if (g.has_edge(apex, order[k])) return order[k];
    return kNoVertex;
  };

  // best[i]: cheapest cover of order[0..i-1]; choice records the last step.
  struct Step {
    std::size_t from = 0;
    int kind = 0;  // 0 gap, 1 free interval, 2 attached interval
  };
  std::vector<std::size_t> best(len + 1, kInf);
  std::vector<Step> step(len + 1);
  best[0] = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (best[i] >= kInf) continue;
    auto relax = [&](std::size_t to, std::size_t cost, Step s) {
      if (best[i] + cost < best[to]) {
        best[to] = best[i] + cost;
        step[to] = s;
      }
    };
    if (!terminal[order[i]]) relax(i + 1, 0, {i, 0});
    for (std::size_t j = i; j < len; ++j) {
      if (j > i && breaks[j]) break;
      if (closed(i, j)) relax(j + 1, j - i, {i, 1});
      if (apex_hook(i, j) != kNoVertex) relax(j + 1, j - i + 1, {i, 2});
    }
  }
  if (best[len] >= kInf) return SolveResult::infeasible();

  std::vector<Edge> edges;
  bool attached = false;
  for (std::size_t at = len; at > 0;) {
    Step s = step[at];
    if (s.kind != 0)
      for (std::size_t k = s.from + 1; k < at; ++k) edges.emplace_back(order[k - 1], order[k]);
    if (s.kind == 2) {
      edges.emplace_back(apex, apex_hook(s.from, at - 1));
      attached = true;
    }
    at = s.from;
  }
  if (apex_school != kInf && !attached) return SolveResult::infeasible();
  return SolveResult::of(make_certificate(std::move(edges)));
}

}  // namespace sf
