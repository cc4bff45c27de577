#pragma once

// Instance model, certificates and elementary graph edits shared by every solver.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sf {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered terminal pair; normalized so s < t.
using Pair = Edge;

enum class ErrorKind {
  contract_violation,  // malformed input to an operation
  guard_exceeded,      // a configured size limit was hit
  precondition,        // structural precondition of a solver does not hold
  unsupported,         // no route can solve the instance
  parse,
};

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency and a
/// lexicographically sorted edge list. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws SolverError on loops, duplicate edges or out-of-range ids.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const;
  /// Index of the edge in edges(), or std::nullopt.
  std::optional<std::size_t> edge_index(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

struct Instance {
  Graph graph;
  std::vector<Pair> pairs;

  Instance() = default;
  /// Pairs with s == t are dropped, the rest normalized, sorted and deduplicated.
  Instance(Graph g, std::vector<Pair> raw_pairs);

  std::size_t num_vertices() const noexcept { return graph.num_vertices(); }
  std::vector<bool> terminal_mask() const;
};

/// Builds pairs from arbitrary (s, t) values; entries with s == t are skipped.
std::vector<Pair> make_pairs(std::initializer_list<std::pair<Vertex, Vertex>> raw);

struct ForestCertificate {
  std::vector<Edge> edges;  // sorted, unique
  std::size_t size() const noexcept { return edges.size(); }
  friend bool operator==(const ForestCertificate&, const ForestCertificate&) = default;
};

struct SolveResult {
  bool feasible = false;
  std::size_t value = 0;
  std::optional<ForestCertificate> certificate;

  static SolveResult infeasible() { return {}; }
  static SolveResult of(ForestCertificate cert) {
    SolveResult r;
    r.feasible = true;
    r.value = cert.size();
    r.certificate = std::move(cert);
    return r;
  }
};

/// Strict ordering used for every min-reduction: feasible first, then lower
/// value, then lexicographically smaller certificate edge list.
bool better(const SolveResult& a, const SolveResult& b);

/// Keeps the better of `best` and `candidate` in `best`.
inline void keep_better(SolveResult& best, SolveResult candidate) {
  if (better(candidate, best)) best = std::move(candidate);
}

/// True iff `cert` is acyclic and connects every pair. Throws
/// SolverError(contract_violation) if a certificate edge is not in the graph.
bool validate_solution(const Instance& inst, const ForestCertificate& cert);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0);
  std::size_t find(std::size_t x);
  /// Returns false if already joined.
  bool unite(std::size_t a, std::size_t b);
  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

struct SchoolPartition {
  std::vector<std::vector<Vertex>> schools;  // terminal schools first, then singletons
  std::size_t terminal_count = 0;            // h'
};

/// Transitive closure of the pairs. Terminal schools are ordered by their
/// smallest vertex; every vertex of `ground` not in a terminal school becomes
/// a singleton school, in ground order.
SchoolPartition schools_of(const Instance& inst, std::span<const Vertex> ground);
SchoolPartition schools_of(const Instance& inst);

/// Result of an edit: the new instance plus maps back to the parent.
struct DerivedInstance {
  Instance instance;
  std::vector<Vertex> vertex_map;  // parent vertex -> child vertex (kNoVertex if gone)
  std::vector<Edge> edge_origin;   // child edge index -> parent edge
};

struct GraphEdit {
  Graph graph;
  std::vector<Vertex> vertex_map;
  std::vector<Edge> edge_origin;
};

/// Merges the ends of `e` into one vertex (numbered like the smaller end,
/// later ids shift down). Parallel edges are merged and loops dropped.
GraphEdit contract_edge(const Graph& g, Edge e);
/// Contracts every vertex in `group` (which must induce a connected subgraph)
/// into a single vertex.
GraphEdit contract_vertices(const Graph& g, std::span<const Vertex> group);
/// Removes the given edges. With `drop_isolated`, vertices left without
/// edges are removed unless listed in `keep`.
GraphEdit delete_edges(const Graph& g, std::span<const Edge> items, bool drop_isolated = false,
                       std::span<const Vertex> keep = {});
GraphEdit delete_vertices(const Graph& g, std::span<const Vertex> items);
GraphEdit induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Applies a graph edit to an instance: terminals are renamed through the
/// vertex map, pairs collapsing to one vertex are dropped. Returns nullopt if
/// a terminal vertex was removed while its pair still needs it.
std::optional<DerivedInstance> rewrite_instance(const Instance& inst, GraphEdit edit);

/// Builds a derived instance from an edit and pairs given in parent ids.
/// Pairs collapsing to one vertex are dropped; a pair on a removed vertex throws.
DerivedInstance derive(GraphEdit edit, std::span<const Pair> parent_pairs);

/// Maps a child certificate back into the parent's edge space and adds `fixed`.
ForestCertificate lift_certificate(const DerivedInstance& d, const ForestCertificate& child,
                                   std::span<const Edge> fixed = {});
/// Same, applied to a whole result (infeasible stays infeasible).
SolveResult lift_result(const DerivedInstance& d, const SolveResult& child, std::span<const Edge> fixed = {});

/// Connected component id per vertex; returns the number of components.
std::size_t connected_components(const Graph& g, std::vector<std::size_t>& comp);
bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);
/// False if some pair lies in two different components of the graph.
bool pairs_connected(const Instance& inst);

/// Canonical text key (vertex count, edges, pairs) used for memoization.
std::string canonical_key(const Instance& inst);

ForestCertificate make_certificate(std::vector<Edge> edges);

/// Execution policy for the enumeration-heavy routines. Both produce identical results.
enum class Exec { serial, parallel };

/// Runs body(0..count-1), across OpenMP threads when `exec` is parallel. An
/// exception thrown by a body is rethrown afterwards (the lowest index wins).
void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body);

/// Calls `visit` with the restricted-growth string of every set partition of
/// {0..n-1}, in lexicographic order of the strings. Stops when `visit` returns true.
void for_each_set_partition(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace sf
