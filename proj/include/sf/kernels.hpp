#pragma once

// Exact solvers for the base classes and the two framework reductions.

#include <functional>

#include "sf/core.hpp"
#include "sf/subgraph.hpp"

namespace sf {

using InstanceSolver = std::function<SolveResult(const Instance&)>;

/// Union of tree paths. Throws precondition if the graph has a cycle.
SolveResult sf_on_forest(const Instance& inst);
/// Max degree <= 2. Each cycle is solved as the best of its single-edge deletions.
SolveResult sf_on_cycle_path_union(const Instance& inst);
/// The graph minus `apex` must be a disjoint union of paths (normally one path).
SolveResult sf_on_fan(const Instance& inst, Vertex apex);

/// Solves each connected component holding a pair separately and joins the
/// certificates. Pairs across components make the instance infeasible.
SolveResult solve_per_component(const Instance& inst, const InstanceSolver& inner);
/// Splits off leaf blocks at their cut vertex, rewriting cross pairs to the cut
/// vertex, until every piece is a single block; `inner` solves the blocks.
SolveResult solve_via_blocks(const Instance& inst, const InstanceSolver& inner);

struct BranchPlan {
  enum class Kind { contracted, cut };
  Kind kind = Kind::contracted;
  Edge e, f;                      // split edges of a cut branch
  DerivedInstance derived;
  std::size_t weight = 0;
  std::vector<Edge> fixed_edges;  // parent edges accounting for `weight`
};

/// Branches of a 2-path p (vertex list, ends distinct). Cut branches whose
/// interior cannot be served are omitted; duplicates keep the lightest.
std::vector<BranchPlan> branch_two_path(const Instance& inst, const std::vector<Vertex>& p);
/// Solves the derived instance with `solver` and lifts the result.
SolveResult solve_branch(const BranchPlan& plan, const InstanceSolver& solver);

inline constexpr std::size_t kTwoPathGuard = 8;
/// Branches on maximal 2-paths with both ends of degree > 2 until every block
/// is a cycle or an edge. Throws guard_exceeded when a block has more than
/// `k_guard` such paths.
SolveResult solve_bounded_two_paths(const Instance& inst, std::size_t k_guard = kTwoPathGuard);

}  // namespace sf
