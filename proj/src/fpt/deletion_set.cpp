#include <algorithm>
#include <array>
#include <functional>

#include "sf/fpt.hpp"
#include "sf/kernels.hpp"
#include "sf/subgraph.hpp"

namespace sf {

namespace {

// 2-SAT over boolean variables (true = hub u side). Clauses are disjunctions
// of two literals; literal 2i means "i on u side", 2i+1 "i on v side".
class TwoSat {
 public:
  explicit TwoSat(std::size_t vars) : n_(vars), graph_(2 * vars) {}

  void clause(std::size_t a, std::size_t b) {
    graph_[a ^ 1].push_back(b);
    graph_[b ^ 1].push_back(a);
  }
  /// Forbids variable `i` taking side `side` (0 = u, 1 = v).
  void forbid(std::size_t i, int side) { clause(2 * i + (side ^ 1), 2 * i + (side ^ 1)); }
  void forbid_pair(std::size_t i, int si, std::size_t j, int sj) { clause(2 * i + (si ^ 1), 2 * j + (sj ^ 1)); }

  /// side per variable, or empty when unsatisfiable.
  std::vector<int> solve() const {
    const std::size_t m = 2 * n_;
    // Kosaraju: order by finish time, then components on the reverse graph.
    std::vector<std::vector<std::size_t>> rev(m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y : graph_[x]) rev[y].push_back(x);
    std::vector<std::size_t> order;
    std::vector<bool> seen(m, false);
    for (std::size_t s = 0; s < m; ++s) {
      if (seen[s]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
      seen[s] = true;
      while (!stack.empty()) {
        auto& [x, i] = stack.back();
        if (i < graph_[x].size()) {
          std::size_t y = graph_[x][i++];
          if (!seen[y]) {
            seen[y] = true;
            stack.emplace_back(y, 0);
          }
        } else {
          order.push_back(x);
          stack.pop_back();
        }
      }
    }
    std::vector<std::size_t> comp(m, m);
    std::size_t count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (comp[*it] != m) continue;
      std::vector<std::size_t> stack{*it};
      comp[*it] = count;
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : rev[x])
          if (comp[y] == m) {
            comp[y] = count;
            stack.push_back(y);
          }
      }
      ++count;
    }
    std::vector<int> side(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (comp[2 * i] == comp[2 * i + 1]) return {};
      // Components come out in topological order of the implication graph.
      side[i] = comp[2 * i] > comp[2 * i + 1] ? 0 : 1;
    }
    return side;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> graph_;
};

SolveResult solve_any(const Instance& inst);

// Solutions in which u and v lie in different components (or are unused).
SolveResult split_endgame(const Instance& inst, Vertex u, Vertex v) {
  const Graph& g = inst.graph;
  const std::size_t n = g.num_vertices();
  const auto terminal = inst.terminal_mask();
  UnionFind uf(n);
  for (const Pair& p : inst.pairs) uf.unite(p.u, p.v);
  if (terminal[u] && terminal[v] && uf.same(u, v)) return SolveResult::infeasible();

  std::vector<std::size_t> school_id(n, n), school_size;
  for (Vertex x = 0; x < n; ++x)
    if (terminal[x]) {
      std::size_t root = uf.find(x);
      if (school_id[root] == n) {
        school_id[root] = school_size.size();
        school_size.push_back(0);
      }
      school_id[x] = school_id[root];
      ++school_size[school_id[x]];
    }

  // Components of G - {u, v}.
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(n, false);
  seen[u] = seen[v] = true;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex y : g.neighbors(comp[i]))
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
    if (comp.size() > 2) throw SolverError(ErrorKind::precondition, "solve_2ds2: component larger than 2");
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }

  auto local = [&](const std::vector<Vertex>& c) {
    return c.size() == 2 && terminal[c[0]] && terminal[c[1]] && school_id[c[0]] == school_id[c[1]] &&
           school_size[school_id[c[0]]] == 2;
  };
  // Nonterminals that may relay their terminal partner to a hub.
  std::vector<std::pair<Vertex, Vertex>> relays;  // (z, partner)
  std::size_t base_cost = 0;
  for (const auto& c : comps) {
    if (local(c)) {
      base_cost += 1;
      continue;
    }
    for (Vertex x : c)
      if (terminal[x]) ++base_cost;
    if (c.size() == 2 && terminal[c[0]] != terminal[c[1]]) {
      Vertex z = terminal[c[0]] ? c[1] : c[0], y = terminal[c[0]] ? c[0] : c[1];
      if (g.has_edge(z, u) || g.has_edge(z, v)) relays.emplace_back(z, y);
    }
  }
  const Vertex hub[2] = {u, v};

  SolveResult best;
  std::vector<std::pair<std::size_t, int>> picked;  // relay index, hub side
  auto evaluate = [&]() {
    TwoSat sat(school_size.size());
    if (terminal[u]) sat.forbid(school_id[u], 1);
    if (terminal[v]) sat.forbid(school_id[v], 0);
    std::vector<int> relay_side(n, -1);
    for (auto [r, side] : picked) relay_side[relays[r].first] = side;
    for (const auto& c : comps) {
      if (local(c)) continue;
      if (c.size() == 1 || terminal[c[0]] != terminal[c[1]]) {
        Vertex y = c.size() == 1 ? c[0] : (terminal[c[0]] ? c[0] : c[1]);
        if (!terminal[y]) continue;
        Vertex z = c.size() == 2 ? (c[0] == y ? c[1] : c[0]) : kNoVertex;
        if (z != kNoVertex && relay_side[z] >= 0) {
          sat.forbid(school_id[y], relay_side[z] ^ 1);
          continue;
        }
        for (int side = 0; side < 2; ++side)
          if (!g.has_edge(y, hub[side])) sat.forbid(school_id[y], side);
        continue;
      }
      if (!terminal[c[0]]) continue;  // two nonterminals stay unused
      const Vertex x = c[0], y = c[1];
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          bool ok = a == b ? (g.has_edge(x, hub[a]) || g.has_edge(y, hub[a]))
                           : (g.has_edge(x, hub[a]) && g.has_edge(y, hub[b]));
          if (ok) continue;
          if (school_id[x] == school_id[y]) {
            if (a == b) sat.forbid(school_id[x], a);
          } else {
            sat.forbid_pair(school_id[x], a, school_id[y], b);
          }
        }
    }
    const std::vector<int> side = sat.solve();
    if (side.empty() && !school_size.empty()) return;

    std::vector<Edge> edges;
    for (const auto& c : comps) {
      if (local(c)) {
        edges.emplace_back(c[0], c[1]);
        continue;
      }
      if (c.size() == 1 || terminal[c[0]] != terminal[c[1]]) {
        Vertex y = c.size() == 1 ? c[0] : (terminal[c[0]] ? c[0] : c[1]);
        if (!terminal[y]) continue;
        Vertex z = c.size() == 2 ? (c[0] == y ? c[1] : c[0]) : kNoVertex;
        const Vertex h = hub[side[school_id[y]]];
        if (z != kNoVertex && relay_side[z] >= 0) {
          edges.emplace_back(z, h);
          edges.emplace_back(z, y);
        } else {
          edges.emplace_back(y, h);
        }
        continue;
      }
      if (!terminal[c[0]]) continue;
      const Vertex x = c[0], y = c[1];
      const int a = side[school_id[x]], b = side[school_id[y]];
      if (a != b) {
        edges.emplace_back(x, hub[a]);
        edges.emplace_back(y, hub[b]);
      } else if (g.has_edge(x, hub[a]) && g.has_edge(y, hub[a])) {
        edges.emplace_back(x, hub[a]);
        edges.emplace_back(y, hub[a]);
      } else {
        Vertex near = g.has_edge(x, hub[a]) ? x : y;
        edges.emplace_back(near, hub[a]);
        edges.emplace_back(x, y);
      }
    }
    auto cert = make_certificate(std::move(edges));
    if (cert.size() != base_cost + picked.size())
      throw SolverError(ErrorKind::contract_violation, "solve_2ds2: endgame size mismatch");
    keep_better(best, SolveResult::of(std::move(cert)));
  };

  // Used relays: at most three, each with a hub it is adjacent to.
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      evaluate();
      return;
    }
    for (std::size_t r = from; r < relays.size(); ++r)
      for (int side = 0; side < 2; ++side) {
        if (!g.has_edge(relays[r].first, hub[side])) continue;
        picked.emplace_back(r, side);
        choose(r + 1, left - 1);
        picked.pop_back();
      }
  };
  for (std::size_t size = 0; size <= 3 && !best.feasible; ++size) choose(0, size);
  return best;
}

SolveResult solve_block(const Instance& inst) {
  const Graph& g = inst.graph;
  if (g.max_degree() <= 2) return sf_on_cycle_path_union(inst);
  auto d = c_deletion_set(g, 2, 2);
  if (!d) throw SolverError(ErrorKind::precondition, "solve_2ds2: no 2-deletion set of size at most 2");
  if (d->size() < 2)
    throw SolverError(ErrorKind::contract_violation, "solve_2ds2: block with a small deletion set has degree > 2");
  const Vertex u = (*d)[0], v = (*d)[1];
  const auto terminal = inst.terminal_mask();

  SolveResult best;
  if (g.has_edge(u, v)) {
    for (const BranchPlan& plan : branch_two_path(inst, {u, v})) keep_better(best, solve_branch(plan, solve_any));
    return best;
  }
  // u and v joined through a short path.
  auto through = [&](std::vector<Vertex> path) {
    std::vector<Edge> fixed;
    for (std::size_t i = 1; i < path.size(); ++i) fixed.emplace_back(path[i - 1], path[i]);
    DerivedInstance d = derive(contract_vertices(g, path), inst.pairs);
    keep_better(best, lift_result(d, solve_any(d.instance), fixed));
  };
  for (Vertex x : g.neighbors(u)) {
    if (x == v) continue;
    if (g.has_edge(x, v)) through({u, x, v});
    for (Vertex y : g.neighbors(x))
      if (y != u && y != v && g.has_edge(y, v)) through({u, x, y, v});
  }
  // One hub unused.
  for (Vertex gone : {v, u}) {
    if (terminal[gone]) continue;
    const Vertex drop[1] = {gone};
    DerivedInstance d = derive(delete_vertices(g, drop), inst.pairs);
    keep_better(best, lift_result(d, solve_any(d.instance)));
  }
  keep_better(best, split_endgame(inst, u, v));
  return best;
}

SolveResult solve_any(const Instance& inst) { return solve_via_blocks(inst, solve_block); }

}  // namespace

SolveResult solve_2ds2(const Instance& inst) {
  if (!c_deletion_set(inst.graph, 2, 2))
    throw SolverError(ErrorKind::precondition, "solve_2ds2: no 2-deletion set of size at most 2");
  return solve_any(inst);
}

namespace {

SolveResult extension_rec(const Instance& inst, std::vector<Edge> X) {
  // Once the graph has a small 2-deletion set the remaining X edges need no branching.
  if (X.empty() || c_deletion_set(inst.graph, 2, 2)) return solve_any(inst);
  const Edge x = X.front();
  X.erase(X.begin());
  SolveResult best;
  for (const BranchPlan& plan : branch_two_path(inst, {x.u, x.v})) {
    std::vector<Edge> rest;
    for (const Edge& e : X) {
      Vertex a = plan.derived.vertex_map[e.u], b = plan.derived.vertex_map[e.v];
      if (a == b) continue;
      rest.emplace_back(a, b);
    }
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    keep_better(best, solve_branch(plan, [&](const Instance& d) { return extension_rec(d, rest); }));
  }
  return best;
}

}  // namespace

SolveResult solve_2ds2_extension(const Instance& inst, std::span<const Edge> X_in) {
  std::vector<Edge> X(X_in.begin(), X_in.end());
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  if (X.size() > kExtensionGuard)
    throw SolverError(ErrorKind::guard_exceeded, "solve_2ds2_extension: |X| = " + std::to_string(X.size()) +
                                                     " exceeds guard " + std::to_string(kExtensionGuard));
  const Graph& g = inst.graph;
  for (const Edge& e : X)
    if (!g.has_edge(e.u, e.v)) throw SolverError(ErrorKind::contract_violation, "solve_2ds2_extension: X edge not in graph");
  const GraphEdit rest = delete_edges(g, X);
  std::vector<bool> endpoint(g.num_vertices(), false);
  for (const Edge& e : X) endpoint[e.u] = endpoint[e.v] = true;
  // Some deletion set of G - X must contain every X endpoint that keeps other edges.
  std::vector<Vertex> loaded;
  for (Vertex x = 0; x < g.num_vertices(); ++x)
    if (endpoint[x] && rest.graph.degree(x) > 0) loaded.push_back(x);
  bool ok = false;
  if (loaded.size() <= 2) {
    std::vector<Vertex> cand = loaded;
    std::function<bool(Vertex)> extend = [&](Vertex from) -> bool {
      if (is_c_deletion_set(rest.graph, 2, cand)) return true;
      if (cand.size() == 2) return false;
      for (Vertex y = from; y < g.num_vertices(); ++y) {
        if (std::find(cand.begin(), cand.end(), y) != cand.end()) continue;
        cand.push_back(y);
        if (extend(y + 1)) return true;
        cand.pop_back();
      }
      return false;
    };
    ok = extend(0);
  }
  if (!ok)
    throw SolverError(ErrorKind::precondition,
                      "solve_2ds2_extension: G - X has no 2-deletion set of size <= 2 covering the loaded X endpoints");
  return extension_rec(inst, X);
}

}  // namespace sf
