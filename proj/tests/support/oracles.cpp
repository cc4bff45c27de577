#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sft {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int root(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool join(int a, int b) {
    a = root(a), b = root(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

std::vector<std::vector<int>> adjacency(const sf::Graph& g) {
  std::vector<std::vector<int>> adj(g.num_vertices());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(static_cast<int>(e.v));
    adj[e.v].push_back(static_cast<int>(e.u));
  }
  return adj;
}

std::size_t largest_component(const sf::Graph& g, std::uint64_t removed) {
  const std::size_t n = g.num_vertices();
  Dsu d(n);
  for (const auto& e : g.edges())
    if (!(removed >> e.u & 1) && !(removed >> e.v & 1)) d.join(e.u, e.v);
  std::vector<std::size_t> size(n, 0);
  std::size_t best = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!(removed >> v & 1)) best = std::max(best, ++size[d.root(static_cast<int>(v))]);
  return best;
}

}  // namespace

SmallPattern path_pattern(int vertices) {
  SmallPattern p{vertices, {}};
  for (int i = 1; i < vertices; ++i) p.edges.emplace_back(i - 1, i);
  return p;
}

SmallPattern claw_pattern() { return {4, {{0, 1}, {0, 2}, {0, 3}}}; }

SmallPattern spider_pattern(int a, int b, int c) {
  SmallPattern p{1, {}};
  for (int leg : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < leg; ++i) {
      p.edges.emplace_back(prev, p.n);
      prev = p.n++;
    }
  }
  return p;
}

SmallPattern union_of(const std::vector<SmallPattern>& parts) {
  SmallPattern out;
  for (const auto& part : parts) {
    for (auto [a, b] : part.edges) out.edges.emplace_back(a + out.n, b + out.n);
    out.n += part.n;
  }
  return out;
}

bool brute_is_forest_solution(const sf::Instance& inst, const std::vector<sf::Edge>& edges) {
  Dsu d(inst.num_vertices());
  for (const auto& e : edges) {
    if (!inst.graph.has_edge(e.u, e.v)) return false;
    if (!d.join(e.u, e.v)) return false;
  }
  for (const auto& p : inst.pairs)
    if (d.root(p.u) != d.root(p.v)) return false;
  return true;
}

std::optional<std::size_t> brute_sf(const sf::Instance& inst) {
  const auto& E = inst.graph.edges();
  const std::size_t m = E.size();
  {
    Dsu all(inst.num_vertices());
    for (const auto& e : E) all.join(e.u, e.v);
    for (const auto& p : inst.pairs)
      if (all.root(p.u) != all.root(p.v)) return std::nullopt;
  }
  // Only the connectivity of the chosen edges matters at the minimum size,
  // which is always a forest.
  std::vector<int> pick;
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t left) -> bool {
    if (left == 0) {
      Dsu d(inst.num_vertices());
      for (int i : pick) d.join(E[i].u, E[i].v);
      for (const auto& p : inst.pairs)
        if (d.root(p.u) != d.root(p.v)) return false;
      return true;
    }
    for (std::size_t i = from; i + left <= m; ++i) {
      pick.push_back(static_cast<int>(i));
      if (choose(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k <= m; ++k) {
    pick.clear();
    if (choose(0, k)) return k;
  }
  return std::nullopt;
}

bool same_optimum(const sf::Instance& inst, const sf::SolveResult& r) {
  const auto want = brute_sf(inst);
  return want ? r.feasible && r.value == *want : !r.feasible;
}

bool brute_contains(const sf::Graph& g, const SmallPattern& p) {
  const int n = static_cast<int>(g.num_vertices());
  if (p.n > n) return false;
  std::vector<int> image(p.n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == p.n) {
      for (auto [a, b] : p.edges)
        if (!g.has_edge(image[a], image[b])) return false;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      image[i] = v;
      if (place(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

std::size_t brute_vertex_cover(const sf::Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    if (size >= best) continue;
    bool ok = true;
    for (const auto& e : g.edges())
      if (!(s >> e.u & 1) && !(s >> e.v & 1)) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

bool brute_has_deletion_set(const sf::Graph& g, std::size_t c, std::size_t d) {
  const std::size_t n = g.num_vertices();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (static_cast<std::size_t>(__builtin_popcountll(s)) <= d && largest_component(g, s) <= c) return true;
  return false;
}

std::size_t brute_longest_path(const sf::Graph& g) {
  const auto adj = adjacency(g);
  std::vector<bool> on(g.num_vertices(), false);
  std::size_t best = 0;
  std::function<void(int, std::size_t)> walk = [&](int v, std::size_t len) {
    best = std::max(best, len);
    for (int w : adj[v])
      if (!on[w]) {
        on[w] = true;
        walk(w, len + 1);
        on[w] = false;
      }
  };
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    on[v] = true;
    walk(static_cast<int>(v), 1);
    on[v] = false;
  }
  return best;
}

bool brute_is_cut_vertex(const sf::Graph& g, sf::Vertex v) {
  const std::size_t n = g.num_vertices();
  auto count = [&](bool drop) {
    Dsu d(n);
    for (const auto& e : g.edges())
      if (!drop || (e.u != v && e.v != v)) d.join(e.u, e.v);
    std::size_t k = 0;
    for (std::size_t x = 0; x < n; ++x)
      if ((!drop || x != v) && d.root(static_cast<int>(x)) == static_cast<int>(x)) ++k;
    return k;
  };
  return count(true) > count(false);
}

std::uint64_t brute_hierarchy_count(std::size_t z) {
  // T(S) = 1 for |S| = 1, otherwise the sum over partitions of S into at
  // least two blocks of the product of T over the blocks. T depends on |S| only.
  std::vector<std::uint64_t> t(z + 1, 0);
  if (z == 0) return 0;
  t[1] = 1;
  for (std::size_t size = 2; size <= z; ++size) {
    std::vector<int> label(size, 0);
    std::function<void(std::size_t, int)> rgs = [&](std::size_t i, int blocks) {
      if (i == size) {
        if (blocks < 2) return;
        std::vector<std::size_t> count(blocks, 0);
        for (int l : label) ++count[l];
        std::uint64_t prod = 1;
        for (auto c : count) prod *= t[c];
        t[size] += prod;
        return;
      }
      for (int l = 0; l <= blocks; ++l) {
        label[i] = l;
        rgs(i + 1, std::max(blocks, l + 1));
      }
    };
    rgs(0, 0);
  }
  return t[z];
}

std::optional<std::int64_t> brute_assignment(const std::vector<std::vector<std::int64_t>>& w) {
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::int64_t> best;
  do {
    std::int64_t sum = 0;
    bool ok = true;
    for (std::size_t r = 0; r < w.size() && ok; ++r) {
      if (w[r][perm[r]] < 0) ok = false;
      else sum += w[r][perm[r]];
    }
    if (ok && (!best || sum < *best)) best = sum;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool certificate_consistent(const sf::Instance& inst, const sf::SolveResult& r) {
  if (!r.feasible) return !r.certificate;
  return r.certificate && r.certificate->size() == r.value && brute_is_forest_solution(inst, r.certificate->edges);
}

}  // namespace sft
