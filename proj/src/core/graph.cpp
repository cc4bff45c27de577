#include "sf/core.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>

namespace sf {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : adj_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw SolverError(ErrorKind::contract_violation, "loop at vertex " + std::to_string(e.u));
    if (e.v >= n) throw SolverError(ErrorKind::contract_violation, "edge endpoint out of range: " + std::to_string(e.v));
    if (i > 0 && edges_[i - 1] == e)
      throw SolverError(ErrorKind::contract_violation,
                        "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= adj_.size() || b >= adj_.size()) return false;
  const auto& list = adj_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Instance::Instance(Graph g, std::vector<Pair> raw_pairs) : graph(std::move(g)) {
  for (const Pair& p : raw_pairs) {
    if (p.u == p.v) continue;
    if (p.v >= graph.num_vertices())
      throw SolverError(ErrorKind::contract_violation, "pair endpoint out of range: " + std::to_string(p.v));
    pairs.push_back(p);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<bool> Instance::terminal_mask() const {
  std::vector<bool> mask(graph.num_vertices(), false);
  for (const Pair& p : pairs) mask[p.u] = mask[p.v] = true;
  return mask;
}

std::vector<Pair> make_pairs(std::initializer_list<std::pair<Vertex, Vertex>> raw) {
  std::vector<Pair> out;
  for (auto [s, t] : raw)
    if (s != t) out.emplace_back(s, t);
  return out;
}

bool better(const SolveResult& a, const SolveResult& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (!a.feasible) return false;
  if (a.value != b.value) return a.value < b.value;
  if (a.certificate && b.certificate) return a.certificate->edges < b.certificate->edges;
  return a.certificate.has_value() && !b.certificate.has_value();
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

bool validate_solution(const Instance& inst, const ForestCertificate& cert) {
  const std::size_t n = inst.graph.num_vertices();
  UnionFind uf(n);
  for (const Edge& e : cert.edges) {
    if (!inst.graph.edge_index(e))
      throw SolverError(ErrorKind::contract_violation,
                        "certificate edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
  }
  for (std::size_t i = 0; i < cert.edges.size(); ++i) {
    if (i > 0 && cert.edges[i - 1] == cert.edges[i]) return false;
    if (!uf.unite(cert.edges[i].u, cert.edges[i].v)) return false;
  }
  for (const Pair& p : inst.pairs)
    if (!uf.same(p.u, p.v)) return false;
  return true;
}

SchoolPartition schools_of(const Instance& inst, std::span<const Vertex> ground) {
  const std::size_t n = inst.graph.num_vertices();
  UnionFind uf(n);
  std::vector<bool> terminal(n, false);
  for (const Pair& p : inst.pairs) {
    uf.unite(p.u, p.v);
    terminal[p.u] = terminal[p.v] = true;
  }
  std::map<std::size_t, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v)
    if (terminal[v]) classes[uf.find(v)].push_back(v);
  SchoolPartition out;
  for (auto& [root, members] : classes) out.schools.push_back(std::move(members));
  std::sort(out.schools.begin(), out.schools.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.terminal_count = out.schools.size();
  for (Vertex v : ground)
    if (!terminal[v]) out.schools.push_back({v});
  return out;
}

SchoolPartition schools_of(const Instance& inst) { return schools_of(inst, std::span<const Vertex>{}); }

namespace {

// Builds an edit from a relabeling old -> new (kNoVertex drops the vertex).
GraphEdit relabel(const Graph& g, std::vector<Vertex> label, std::size_t new_n) {
  std::map<Edge, Edge> merged;  // child edge -> smallest parent edge
  for (const Edge& e : g.edges()) {
    Vertex a = label[e.u], b = label[e.v];
    if (a == kNoVertex || b == kNoVertex || a == b) continue;
    Edge child(a, b);
    auto it = merged.find(child);
    if (it == merged.end()) merged.emplace(child, e);
  }
  GraphEdit out;
  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (auto& [child, parent] : merged) {
    edges.push_back(child);
    out.edge_origin.push_back(parent);
  }
  out.graph = Graph(new_n, std::move(edges));
  out.vertex_map = std::move(label);
  return out;
}

// Compacts a label vector whose values are representatives in 0..n-1.
std::size_t compact(std::vector<Vertex>& label) {
  std::vector<Vertex> rename(label.size(), kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < label.size(); ++v) {
    Vertex r = label[v];
    if (r == kNoVertex) continue;
    if (rename[r] == kNoVertex) rename[r] = next++;
  }
  for (Vertex& l : label)
    if (l != kNoVertex) l = rename[l];
  return next;
}

}  // namespace

GraphEdit contract_vertices(const Graph& g, std::span<const Vertex> group) {
  if (group.empty()) throw SolverError(ErrorKind::contract_violation, "empty contraction group");
  std::vector<Vertex> label(g.num_vertices());
  std::iota(label.begin(), label.end(), 0);
  Vertex rep = *std::min_element(group.begin(), group.end());
  for (Vertex v : group) {
    if (v >= g.num_vertices()) throw SolverError(ErrorKind::contract_violation, "contraction vertex out of range");
    label[v] = rep;
  }
  std::size_t n = compact(label);
  return relabel(g, std::move(label), n);
}

GraphEdit contract_edge(const Graph& g, Edge e) {
  if (!g.edge_index(e))
    throw SolverError(ErrorKind::contract_violation,
                      "contract_edge: missing edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  const Vertex group[2] = {e.u, e.v};
  return contract_vertices(g, group);
}

GraphEdit delete_edges(const Graph& g, std::span<const Edge> items, bool drop_isolated, std::span<const Vertex> keep) {
  std::vector<Edge> removed(items.begin(), items.end());
  std::sort(removed.begin(), removed.end());
  for (const Edge& e : removed)
    if (!g.edge_index(e))
      throw SolverError(ErrorKind::contract_violation,
                        "delete_edges: missing edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  std::vector<Edge> rest;
  std::vector<std::size_t> degree(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    if (std::binary_search(removed.begin(), removed.end(), e)) continue;
    rest.push_back(e);
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<Vertex> label(g.num_vertices());
  std::iota(label.begin(), label.end(), 0);
  if (drop_isolated) {
    std::vector<bool> kept(g.num_vertices(), false);
    for (Vertex v : keep) kept[v] = true;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (degree[v] == 0 && !kept[v]) label[v] = kNoVertex;
  }
  std::size_t n = compact(label);
  GraphEdit out;
  out.vertex_map = label;
  std::vector<Edge> edges;
  for (const Edge& e : rest) {
    edges.emplace_back(label[e.u], label[e.v]);
    out.edge_origin.push_back(e);
  }
  // Compaction preserves order, so edges stay sorted and aligned with origins.
  out.graph = Graph(n, std::move(edges));
  return out;
}

GraphEdit delete_vertices(const Graph& g, std::span<const Vertex> items) {
  std::vector<Vertex> label(g.num_vertices());
  std::iota(label.begin(), label.end(), 0);
  for (Vertex v : items) {
    if (v >= g.num_vertices()) throw SolverError(ErrorKind::contract_violation, "delete_vertices: vertex out of range");
    label[v] = kNoVertex;
  }
  std::size_t n = compact(label);
  return relabel(g, std::move(label), n);
}

GraphEdit induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> label(g.num_vertices(), kNoVertex);
  for (Vertex v : keep) label[v] = v;
  std::size_t n = compact(label);
  return relabel(g, std::move(label), n);
}

std::optional<DerivedInstance> rewrite_instance(const Instance& inst, GraphEdit edit) {
  std::vector<Pair> pairs;
  for (const Pair& p : inst.pairs) {
    Vertex a = edit.vertex_map[p.u], b = edit.vertex_map[p.v];
    if (a == kNoVertex || b == kNoVertex) return std::nullopt;
    if (a != b) pairs.emplace_back(a, b);
  }
  DerivedInstance d;
  d.instance = Instance(std::move(edit.graph), std::move(pairs));
  d.vertex_map = std::move(edit.vertex_map);
  d.edge_origin = std::move(edit.edge_origin);
  return d;
}

DerivedInstance derive(GraphEdit edit, std::span<const Pair> parent_pairs) {
  std::vector<Pair> pairs;
  for (const Pair& p : parent_pairs) {
    Vertex a = edit.vertex_map[p.u], b = edit.vertex_map[p.v];
    if (a == kNoVertex || b == kNoVertex)
      throw SolverError(ErrorKind::contract_violation, "derive: pair endpoint removed by edit");
    if (a != b) pairs.emplace_back(a, b);
  }
  DerivedInstance d;
  d.instance = Instance(std::move(edit.graph), std::move(pairs));
  d.vertex_map = std::move(edit.vertex_map);
  d.edge_origin = std::move(edit.edge_origin);
  return d;
}

ForestCertificate make_certificate(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ForestCertificate{std::move(edges)};
}

ForestCertificate lift_certificate(const DerivedInstance& d, const ForestCertificate& child, std::span<const Edge> fixed) {
  std::vector<Edge> edges(fixed.begin(), fixed.end());
  for (const Edge& e : child.edges) {
    auto idx = d.instance.graph.edge_index(e);
    if (!idx) throw SolverError(ErrorKind::contract_violation, "lift_certificate: edge not in derived graph");
    edges.push_back(d.edge_origin[*idx]);
  }
  return make_certificate(std::move(edges));
}

SolveResult lift_result(const DerivedInstance& d, const SolveResult& child, std::span<const Edge> fixed) {
  if (!child.feasible) return SolveResult::infeasible();
  return SolveResult::of(lift_certificate(d, *child.certificate, fixed));
}

std::size_t connected_components(const Graph& g, std::vector<std::size_t>& comp) {
  const std::size_t n = g.num_vertices();
  comp.assign(n, static_cast<std::size_t>(-1));
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != static_cast<std::size_t>(-1)) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (comp[y] == static_cast<std::size_t>(-1)) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) {
  std::vector<std::size_t> comp;
  return connected_components(g, comp) <= 1;
}

bool is_acyclic(const Graph& g) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges())
    if (!uf.unite(e.u, e.v)) return false;
  return true;
}

bool pairs_connected(const Instance& inst) {
  std::vector<std::size_t> comp;
  connected_components(inst.graph, comp);
  for (const Pair& p : inst.pairs)
    if (comp[p.u] != comp[p.v]) return false;
  return true;
}

std::string canonical_key(const Instance& inst) {
  std::ostringstream os;
  os << inst.graph.num_vertices() << '|';
  for (const Edge& e : inst.graph.edges()) os << e.u << ',' << e.v << ';';
  os << '|';
  for (const Pair& p : inst.pairs) os << p.u << ',' << p.v << ';';
  return os.str();
}

}  // namespace sf

namespace sf {

void for_each_set_partition(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> rgs(n, 0), prefix_max(n, 0);
  if (n == 0) {
    visit(rgs);
    return;
  }
  while (true) {
    if (visit(rgs)) return;
    // Rightmost position that can still grow.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    std::size_t top = std::max(prefix_max[i - 1], rgs[i]);
    prefix_max[i] = top;
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = top;
    }
  }
}

void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace sf
