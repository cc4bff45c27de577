#pragma once

// Forbidden-pattern detection and structural parameters.

#include <optional>
#include <string>
#include <vector>

#include "sf/core.hpp"

namespace sf {

/// Pattern family: paths, the claw, subdivided claws, disjoint unions, and
/// "H + sP2" (an inner pattern plus s disjoint edges).
class Pattern {
 public:
  enum class Kind { path, star13, subdivided_claw, disjoint_union, plus_p2 };

  static Pattern path(std::size_t vertices);
  static Pattern star13();
  /// S_{a,b,c}: legs with a, b and c edges.
  static Pattern subdivided_claw(std::size_t a, std::size_t b, std::size_t c);
  static Pattern disjoint_union(std::vector<Pattern> parts);
  static Pattern plus_p2(Pattern inner, std::size_t s);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& params() const noexcept { return params_; }
  const std::vector<Pattern>& parts() const noexcept { return parts_; }

  /// Vertex count of the full pattern (including the sP2 part).
  std::size_t vertex_count() const;
  /// The concrete pattern graph without the sP2 part (plus_p2 unwraps its inner).
  Graph core_graph() const;
  /// Number of disjoint P2's requested (0 unless plus_p2).
  std::size_t p2_count() const noexcept { return kind_ == Kind::plus_p2 ? params_[0] : 0; }
  const Pattern& core() const { return kind_ == Kind::plus_p2 ? parts_[0] : *this; }
  std::string name() const;

 private:
  Pattern(Kind k, std::vector<std::size_t> p, std::vector<Pattern> parts)
      : kind_(k), params_(std::move(p)), parts_(std::move(parts)) {}

  Kind kind_;
  std::vector<std::size_t> params_;
  std::vector<Pattern> parts_;
};

/// Named patterns used throughout the dispatch.
namespace patterns {
Pattern two_claws();             // 2K_{1,3}
Pattern two_claws_p3();          // 2K_{1,3} + P3
Pattern two_p4_p3();             // 2P4 + P3
Pattern s114();                  // S_{1,1,4}
}  // namespace patterns

struct Embedding {
  std::vector<Vertex> vertex_map;  // pattern vertex -> host vertex (core part, then 2 per P2)
  std::vector<Edge> edges;         // host edges witnessing pattern edges
};

inline constexpr std::size_t kDefaultPatternLimit = 12;

/// Finds a (not necessarily induced) copy of `pat` in `g`.
/// Throws SolverError(guard_exceeded) if the pattern exceeds `limit` vertices.
std::optional<Embedding> find_embedding(const Graph& g, const Pattern& pat,
                                        std::size_t limit = kDefaultPatternLimit);
bool is_subgraph_free(const Graph& g, const Pattern& pat, std::size_t limit = kDefaultPatternLimit);

/// Maximum matching of g restricted to vertices not in `excluded`.
std::vector<Edge> maximum_matching(const Graph& g, const std::vector<bool>& excluded = {});

struct LongestPath {
  std::size_t vertices = 0;    // exact if < bound, otherwise equal to bound
  std::vector<Vertex> path;    // a witness with `vertices` vertices
  bool capped = false;         // true when the true length is >= bound
};
/// Longest path search capped at `bound` vertices (bound <= 10).
LongestPath longest_path_up_to(const Graph& g, std::size_t bound);

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;  // sorted vertex sets
  std::vector<Vertex> cut_vertices;         // sorted
  /// Block-cut tree: for each block the cut vertices it contains.
  std::vector<std::vector<Vertex>> block_cuts;
};
BlockDecomposition blocks(const Graph& g);

struct TwoPath {
  std::vector<Vertex> vertices;  // ordered from one end to the other
  std::size_t front_degree = 0;
  std::size_t back_degree = 0;
  bool maximal = false;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

struct TwoPathReport {
  std::vector<TwoPath> paths;                 // maximal 2-paths, each chain once
  std::vector<std::vector<Vertex>> cycles;    // components where every vertex has degree 2
};
TwoPathReport maximal_two_paths(const Graph& g);
/// True iff `p` is a path of g whose internal vertices have degree 2.
bool is_two_path(const Graph& g, const std::vector<Vertex>& p);

inline constexpr std::size_t kVertexCoverGuard = 25;
/// A vertex cover with at most k vertices, or nullopt. Throws if k > guard.
std::optional<std::vector<Vertex>> vertex_cover_at_most(const Graph& g, std::size_t k);
/// A minimum vertex cover if its size is <= k.
std::optional<std::vector<Vertex>> minimum_vertex_cover(const Graph& g, std::size_t k);
bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover);

/// Smallest-first, lexicographically first set of at most d vertices whose
/// removal leaves components of at most c vertices. d <= 3.
std::optional<std::vector<Vertex>> c_deletion_set(const Graph& g, std::size_t c, std::size_t d);
bool is_c_deletion_set(const Graph& g, std::size_t c, const std::vector<Vertex>& set);

}  // namespace sf
