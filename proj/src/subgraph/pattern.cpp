#include <algorithm>
#include <functional>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "sf/subgraph.hpp"

namespace sf {

Pattern Pattern::path(std::size_t vertices) {
  if (vertices < 1) throw SolverError(ErrorKind::contract_violation, "path pattern needs >= 1 vertex");
  return Pattern(Kind::path, {vertices}, {});
}

Pattern Pattern::star13() { return Pattern(Kind::star13, {}, {}); }

Pattern Pattern::subdivided_claw(std::size_t a, std::size_t b, std::size_t c) {
  if (a < 1 || b < 1 || c < 1) throw SolverError(ErrorKind::contract_violation, "subdivided claw legs must be >= 1");
  return Pattern(Kind::subdivided_claw, {a, b, c}, {});
}

Pattern Pattern::disjoint_union(std::vector<Pattern> parts) {
  if (parts.empty()) throw SolverError(ErrorKind::contract_violation, "empty disjoint union");
  return Pattern(Kind::disjoint_union, {}, std::move(parts));
}

Pattern Pattern::plus_p2(Pattern inner, std::size_t s) {
  std::vector<Pattern> parts;
  parts.push_back(std::move(inner));
  return Pattern(Kind::plus_p2, {s}, std::move(parts));
}

std::size_t Pattern::vertex_count() const {
  switch (kind_) {
    case Kind::path: return params_[0];
    case Kind::star13: return 4;
    case Kind::subdivided_claw: return 1 + params_[0] + params_[1] + params_[2];
    case Kind::disjoint_union: {
      std::size_t total = 0;
      for (const auto& p : parts_) total += p.vertex_count();
      return total;
    }
    case Kind::plus_p2: return parts_[0].vertex_count() + 2 * params_[0];
  }
  return 0;
}

namespace {

void append_pattern(const Pattern& p, std::vector<Edge>& edges, Vertex& next) {
  using K = Pattern::Kind;
  switch (p.kind()) {
    case K::path: {
      Vertex base = next;
      for (std::size_t i = 1; i < p.params()[0]; ++i) edges.emplace_back(base + i - 1, base + i);
      next += static_cast<Vertex>(p.params()[0]);
      break;
    }
    case K::star13: {
      Vertex c = next;
      for (Vertex i = 1; i <= 3; ++i) edges.emplace_back(c, c + i);
      next += 4;
      break;
    }
    case K::subdivided_claw: {
      Vertex c = next++;
      for (std::size_t leg : p.params()) {
        Vertex prev = c;
        for (std::size_t i = 0; i < leg; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      break;
    }
    case K::disjoint_union:
      for (const auto& part : p.parts()) append_pattern(part, edges, next);
      break;
    case K::plus_p2:
      append_pattern(p.parts()[0], edges, next);
      break;
  }
}

}  // namespace

Graph Pattern::core_graph() const {
  std::vector<Edge> edges;
  Vertex next = 0;
  append_pattern(core(), edges, next);
  return Graph(next, std::move(edges));
}

std::string Pattern::name() const {
  switch (kind_) {
    case Kind::path: return "P" + std::to_string(params_[0]);
    case Kind::star13: return "K13";
    case Kind::subdivided_claw:
      return "S" + std::to_string(params_[0]) + std::to_string(params_[1]) + std::to_string(params_[2]);
    case Kind::disjoint_union: {
      std::string out;
      for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "+" : "") + parts_[i].name();
      return out;
    }
    case Kind::plus_p2: return parts_[0].name() + "+" + std::to_string(params_[0]) + "P2";
  }
  return "?";
}

namespace patterns {
Pattern two_claws() { return Pattern::disjoint_union({Pattern::star13(), Pattern::star13()}); }
Pattern two_claws_p3() { return Pattern::disjoint_union({Pattern::star13(), Pattern::star13(), Pattern::path(3)}); }
Pattern two_p4_p3() { return Pattern::disjoint_union({Pattern::path(4), Pattern::path(4), Pattern::path(3)}); }
Pattern s114() { return Pattern::subdivided_claw(1, 1, 4); }
}  // namespace patterns

std::vector<Edge> maximum_matching(const Graph& g, const std::vector<bool>& excluded) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const std::size_t n = g.num_vertices();
  BGraph bg(n);
  for (const Edge& e : g.edges()) {
    if (!excluded.empty() && (excluded[e.u] || excluded[e.v])) continue;
    boost::add_edge(e.u, e.v, bg);
  }
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<Edge> out;
  const auto null = boost::graph_traits<BGraph>::null_vertex();
  for (std::size_t v = 0; v < n; ++v)
    if (mate[v] != null && v < mate[v]) out.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(mate[v]));
  return out;
}

namespace {

// Backtracking over injective maps; calls `visit` for each embedding of the
// pattern graph until it returns true.
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pat) : host_(host), pat_(pat) {
    const std::size_t k = pat.num_vertices();
    // Order: per component BFS from its max-degree vertex, larger components first.
    std::vector<bool> seen(k, false);
    std::vector<Vertex> roots(k);
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(), [&](Vertex a, Vertex b) { return pat.degree(a) > pat.degree(b); });
    for (Vertex r : roots) {
      if (seen[r]) continue;
      std::vector<Vertex> queue{r};
      seen[r] = true;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex y : pat.neighbors(queue[i]))
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
      order_.insert(order_.end(), queue.begin(), queue.end());
    }
    position_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) position_[order_[i]] = i;
    map_.assign(k, kNoVertex);
    used_.assign(host.num_vertices(), false);
  }

  // Prunes partial maps that cannot leave `need` disjoint host edges: every
  // copy of the unplaced pattern part uses at least tau of its cover vertices.
  void bound_by_cover(const std::vector<Vertex>& cover, std::size_t need) {
    const std::size_t k = pat_.num_vertices();
    in_cover_.assign(host_.num_vertices(), false);
    for (Vertex c : cover) in_cover_[c] = true;
    cover_left_ = cover.size();
    need_ = need;
    tau_suffix_.assign(k + 1, 0);
    for (std::size_t d = 0; d < k; ++d) {
      std::uint32_t rest = 0;
      for (std::size_t i = d; i < k; ++i) rest |= std::uint32_t{1} << order_[i];
      std::size_t best = k;
      for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(sub));
        bool covers = size < best;
        for (const Edge& e : pat_.edges()) {
          if (!covers) break;
          if ((rest >> e.u & 1) && (rest >> e.v & 1) && !(sub >> e.u & 1) && !(sub >> e.v & 1)) covers = false;
        }
        if (covers) best = size;
        if (sub == 0) break;
      }
      tau_suffix_[d] = best;
    }
    bounded_ = true;
  }

  bool run(const std::function<bool(const std::vector<Vertex>&)>& visit) {
    visit_ = &visit;
    if (pat_.num_vertices() > host_.num_vertices() || pat_.num_edges() > host_.num_edges()) return false;
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (bounded_ && cover_left_ < need_ + tau_suffix_[depth]) return false;
    if (depth == order_.size()) return (*visit_)(map_);
    const Vertex pv = order_[depth];
    Vertex anchor = kNoVertex;
    for (Vertex q : pat_.neighbors(pv))
      if (position_[q] < depth) {
        anchor = map_[q];
        break;
      }
    auto try_candidate = [&](Vertex hv) -> bool {
      if (used_[hv] || host_.degree(hv) < pat_.degree(pv)) return false;
      for (Vertex q : pat_.neighbors(pv))
        if (position_[q] < depth && !host_.has_edge(hv, map_[q])) return false;
      map_[pv] = hv;
      used_[hv] = true;
      const bool cover_vertex = bounded_ && in_cover_[hv];
      if (cover_vertex) --cover_left_;
      bool done = extend(depth + 1);
      if (cover_vertex) ++cover_left_;
      used_[hv] = false;
      map_[pv] = kNoVertex;
      return done;
    };
    if (anchor != kNoVertex) {
      for (Vertex hv : host_.neighbors(anchor))
        if (try_candidate(hv)) return true;
    } else {
      for (Vertex hv = 0; hv < host_.num_vertices(); ++hv)
        if (try_candidate(hv)) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  bool bounded_ = false;
  std::vector<bool> in_cover_;
  std::size_t cover_left_ = 0, need_ = 0;
  std::vector<std::size_t> tau_suffix_;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
};

}  // namespace

std::optional<Embedding> find_embedding(const Graph& g, const Pattern& pat, std::size_t limit) {
  if (pat.vertex_count() > limit)
    throw SolverError(ErrorKind::guard_exceeded,
                      "pattern " + pat.name() + " has " + std::to_string(pat.vertex_count()) +
                          " vertices, limit is " + std::to_string(limit));
  const Graph core = pat.core_graph();
  const std::size_t s = pat.p2_count();
  if (pat.vertex_count() > g.num_vertices()) return std::nullopt;
  std::optional<Embedding> found;
  Matcher matcher(g, core);
  if (s > 0) {
    const auto m = maximum_matching(g);
    if (m.size() < s) return std::nullopt;
    // Below this size some core image might hit every maximum matching.
    if (m.size() < s + core.num_vertices()) {
      std::vector<Vertex> cover;
      if (2 * m.size() <= kVertexCoverGuard) cover = *minimum_vertex_cover(g, 2 * m.size());
      else
        for (const Edge& e : m) cover.push_back(e.u), cover.push_back(e.v);
      matcher.bound_by_cover(cover, s);
    }
  }
  matcher.run([&](const std::vector<Vertex>& map) {
    std::vector<Edge> extra;
    if (s > 0) {
      std::vector<bool> excluded(g.num_vertices(), false);
      for (Vertex v : map) excluded[v] = true;
      auto matching = maximum_matching(g, excluded);
      if (matching.size() < s) return false;
      extra.assign(matching.begin(), matching.begin() + static_cast<std::ptrdiff_t>(s));
    }
    Embedding emb;
    emb.vertex_map = map;
    for (const Edge& e : core.edges()) emb.edges.emplace_back(map[e.u], map[e.v]);
    for (const Edge& e : extra) {
      emb.vertex_map.push_back(e.u);
      emb.vertex_map.push_back(e.v);
      emb.edges.push_back(e);
    }
    found = std::move(emb);
    return true;
  });
  return found;
}

bool is_subgraph_free(const Graph& g, const Pattern& pat, std::size_t limit) {
  return !find_embedding(g, pat, limit).has_value();
}

}  // namespace sf
