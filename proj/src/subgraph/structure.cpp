#include <algorithm>
#include <functional>
#include <set>

#include "sf/subgraph.hpp"

namespace sf {

LongestPath longest_path_up_to(const Graph& g, std::size_t bound) {
  if (bound > 10) throw SolverError(ErrorKind::guard_exceeded, "longest_path_up_to: bound must be <= 10");
  LongestPath best;
  const std::size_t n = g.num_vertices();
  if (n == 0 || bound == 0) return best;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);

  std::function<bool(Vertex)> dfs = [&](Vertex x) -> bool {
    path.push_back(x);
    on_path[x] = true;
    if (path.size() > best.vertices) {
      best.vertices = path.size();
      best.path = path;
    }
    bool done = best.vertices >= bound;
    if (!done)
      for (Vertex y : g.neighbors(x))
        if (!on_path[y] && dfs(y)) {
          done = true;
          break;
        }
    on_path[x] = false;
    path.pop_back();
    return done;
  };
  for (Vertex s = 0; s < n; ++s)
    if (dfs(s)) break;
  best.capped = best.vertices >= bound;
  return best;
}

BlockDecomposition blocks(const Graph& g) {
  const std::size_t n = g.num_vertices();
  BlockDecomposition out;
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> stack;
  std::vector<bool> is_cut(n, false);

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex x, Vertex parent) {
    disc[x] = low[x] = ++timer;
    std::size_t children = 0;
    for (Vertex y : g.neighbors(x)) {
      if (y == parent) continue;
      if (disc[y] == 0) {
        ++children;
        stack.emplace_back(x, y);
        dfs(y, x);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) {
          if (parent != kNoVertex || children > 1) is_cut[x] = true;
          std::set<Vertex> verts;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            verts.insert(e.u);
            verts.insert(e.v);
            if (e == Edge(x, y)) break;
          }
          out.blocks.emplace_back(verts.begin(), verts.end());
        }
      } else if (disc[y] < disc[x]) {
        stack.emplace_back(x, y);
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] == 0 && g.degree(v) > 0) dfs(v, kNoVertex);

  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (const auto& b : out.blocks) {
    std::vector<Vertex> cuts;
    for (Vertex v : b)
      if (is_cut[v]) cuts.push_back(v);
    out.block_cuts.push_back(std::move(cuts));
  }
  return out;
}

TwoPathReport maximal_two_paths(const Graph& g) {
  const std::size_t n = g.num_vertices();
  TwoPathReport out;
  std::vector<bool> covered(n, false);
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) == 2 || g.degree(x) == 0) continue;
    covered[x] = true;
    for (Vertex first : g.neighbors(x)) {
      std::vector<Vertex> walk{x};
      Vertex prev = x, cur = first;
      while (g.degree(cur) == 2 && cur != x) {
        walk.push_back(cur);
        covered[cur] = true;
        auto nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      walk.push_back(cur);
      // Report each chain from its lexicographically smaller (end, first-step) side.
      const Vertex end = walk.back();
      const Vertex before_end = walk[walk.size() - 2];
      if (std::pair(x, first) > std::pair(end, before_end)) continue;
      TwoPath p;
      p.vertices = std::move(walk);
      p.front_degree = g.degree(p.vertices.front());
      p.back_degree = g.degree(p.vertices.back());
      p.maximal = p.front_degree != 2 && p.back_degree != 2;
      out.paths.push_back(std::move(p));
    }
  }
  for (Vertex s = 0; s < n; ++s) {
    if (covered[s] || g.degree(s) != 2) continue;
    std::vector<Vertex> cycle{s};
    covered[s] = true;
    Vertex prev = s, cur = g.neighbors(s)[0];
    while (cur != s) {
      cycle.push_back(cur);
      covered[cur] = true;
      auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool is_two_path(const Graph& g, const std::vector<Vertex>& p) {
  if (p.size() < 2) return false;
  std::set<Vertex> distinct(p.begin(), p.end());
  if (distinct.size() != p.size()) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!g.has_edge(p[i - 1], p[i])) return false;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (g.degree(p[i]) != 2) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : cover) in[v] = true;
  for (const Edge& e : g.edges())
    if (!in[e.u] && !in[e.v]) return false;
  return true;
}

namespace {

bool cover_search(const Graph& g, std::vector<bool>& taken, std::size_t k, std::vector<Vertex>& chosen) {
  // Residual degrees.
  Vertex pick = kNoVertex, leaf = kNoVertex;
  std::size_t best_deg = 0, residual_edges = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (taken[v]) continue;
    std::size_t d = 0;
    for (Vertex y : g.neighbors(v))
      if (!taken[y]) ++d;
    residual_edges += d;
    if (d > best_deg) {
      best_deg = d;
      pick = v;
    }
    if (d == 1 && leaf == kNoVertex) leaf = v;
  }
  residual_edges /= 2;
  if (residual_edges == 0) return true;
  if (k == 0 || residual_edges > k * best_deg) return false;

  auto take = [&](Vertex v) {
    taken[v] = true;
    chosen.push_back(v);
  };
  auto untake = [&](Vertex v) {
    taken[v] = false;
    chosen.pop_back();
  };

  if (leaf != kNoVertex) {
    Vertex nb = kNoVertex;
    for (Vertex y : g.neighbors(leaf))
      if (!taken[y]) nb = y;
    take(nb);
    if (cover_search(g, taken, k - 1, chosen)) return true;
    untake(nb);
    return false;
  }
  take(pick);
  if (cover_search(g, taken, k - 1, chosen)) return true;
  untake(pick);
  if (best_deg > k) return false;
  std::vector<Vertex> nbs;
  for (Vertex y : g.neighbors(pick))
    if (!taken[y]) nbs.push_back(y);
  for (Vertex y : nbs) take(y);
  taken[pick] = true;  // pick is now fully covered; keep it out of the residual graph
  bool ok = cover_search(g, taken, k - nbs.size(), chosen);
  taken[pick] = false;
  if (ok) return true;
  for (std::size_t i = 0; i < nbs.size(); ++i) untake(nbs[nbs.size() - 1 - i]);
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> vertex_cover_at_most(const Graph& g, std::size_t k) {
  if (k > kVertexCoverGuard)
    throw SolverError(ErrorKind::guard_exceeded, "vertex_cover_at_most: k=" + std::to_string(k) + " exceeds guard " +
                                                     std::to_string(kVertexCoverGuard));
  std::vector<bool> taken(g.num_vertices(), false);
  std::vector<Vertex> chosen;
  if (!cover_search(g, taken, k, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<Vertex>> minimum_vertex_cover(const Graph& g, std::size_t k) {
  for (std::size_t t = 0; t <= k; ++t)
    if (auto c = vertex_cover_at_most(g, t)) return c;
  return std::nullopt;
}

bool is_c_deletion_set(const Graph& g, std::size_t c, const std::vector<Vertex>& set) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> gone(n, false);
  for (Vertex v : set) gone[v] = true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    std::size_t size = 0;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      if (++size > c) return false;
      for (Vertex y : g.neighbors(x))
        if (!gone[y] && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> c_deletion_set(const Graph& g, std::size_t c, std::size_t d) {
  if (d > 3) throw SolverError(ErrorKind::guard_exceeded, "c_deletion_set: d must be <= 3");
  const Vertex n = static_cast<Vertex>(g.num_vertices());
  std::vector<Vertex> set;
  std::function<bool(Vertex, std::size_t)> choose = [&](Vertex from, std::size_t remaining) -> bool {
    if (remaining == 0) return is_c_deletion_set(g, c, set);
    for (Vertex v = from; v < n; ++v) {
      set.push_back(v);
      if (choose(v + 1, remaining - 1)) return true;
      set.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= d; ++size)
    if (choose(0, size)) return set;
  return std::nullopt;
}

}  // namespace sf
