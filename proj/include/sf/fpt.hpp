#pragma once

// Vertex-cover dynamic program and the solvers for graphs with a small
// 2-deletion set.

#include <cstdint>
#include <functional>
#include <span>

#include "sf/core.hpp"

namespace sf {

inline constexpr std::int64_t kNoArc = -1;

struct Assignment {
  bool feasible = false;
  std::int64_t weight = 0;
  std::vector<std::size_t> mate;  // row -> column
};

/// Square cost matrix, kNoArc marks a missing edge. Throws contract_violation
/// on a ragged or non-square matrix.
Assignment min_weight_perfect_matching(const std::vector<std::vector<std::int64_t>>& weights);

/// Rooted tree on labeled leaves 0..z-1 whose internal nodes all have at least
/// two children. Each internal node lists the leaf sets of its children
/// (bitmasks over the leaves); node 0 is the root.
struct Hierarchy {
  std::vector<std::vector<std::uint32_t>> nodes;
  std::size_t internal() const noexcept { return nodes.size(); }
};

inline constexpr std::size_t kHierarchyLeafGuard = 12;
/// All hierarchies on `leaves` leaves with at most `max_internal` internal nodes.
/// One leaf gives the single tree without internal nodes.
std::vector<Hierarchy> enumerate_hierarchies(std::size_t leaves, std::size_t max_internal = SIZE_MAX);

struct PatternForest {
  std::vector<Hierarchy> trees;  // one per entry of the counts vector
  std::size_t beta = 0;          // total internal nodes
};
/// Visits every combination of hierarchies, one per count, with total internal
/// nodes at most `max_internal`. Stops early when `visit` returns true.
void for_each_pattern_forest(const std::vector<std::size_t>& counts, std::size_t max_internal,
                             const std::function<bool(const PatternForest&)>& visit);
std::vector<PatternForest> enumerate_pattern_forests(const std::vector<std::size_t>& counts,
                                                     std::size_t max_internal = SIZE_MAX);

struct CoverContext {
  std::vector<Vertex> cover;        // C, sorted
  std::vector<Vertex> remainder;    // R = V \ C, sorted
  SchoolPartition schools;          // over R
  std::size_t lift_count = 0;
  std::vector<Edge> pendant_edges;  // edge (c, c') per lifted cover vertex
};

struct LiftedInstance {
  Instance instance;
  CoverContext context;
};

/// Moves the terminals on cover vertices to fresh pendant vertices. Throws
/// contract_violation if `cover` is not a vertex cover.
LiftedInstance lift_terminals_off_cover(const Instance& inst, std::span<const Vertex> cover);

inline constexpr std::size_t kCoverGuard = 12;
/// Exact solver parameterized by the given vertex cover (at most kCoverGuard vertices).
SolveResult solve_vertex_cover_fpt(const Instance& inst, std::span<const Vertex> cover, Exec exec = Exec::parallel);

/// Exact solver for graphs with a 2-deletion set of size at most 2. Throws
/// precondition if none exists.
SolveResult solve_2ds2(const Instance& inst);

inline constexpr std::size_t kExtensionGuard = 24;
/// Branches on every edge of X (contract or delete), then solves the leaves
/// with solve_2ds2. G - X must have a 2-deletion set D of size at most 2 and
/// every endpoint of an X edge must be isolated in G - X or lie in D.
SolveResult solve_2ds2_extension(const Instance& inst, std::span<const Edge> X);

}  // namespace sf
