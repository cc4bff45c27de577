#pragma once

// Exact exponential solvers used as ground truth.

#include <span>

#include "sf/core.hpp"

namespace sf {

struct OracleBudget {
  std::size_t max_edges_for_subset_enum = 22;
  std::size_t max_schools_for_partition = 6;
  std::size_t max_terminals_per_tree = 10;
};

/// Minimum Steiner forest by enumerating edge subsets in increasing size.
/// Among optimal forests the lexicographically smallest edge list is returned.
SolveResult sf_subset_enum(const Instance& inst, const OracleBudget& budget = {}, Exec exec = Exec::parallel);

/// Minimum Steiner tree on `terminals` (Dreyfus-Wagner, unit weights).
SolveResult steiner_tree_dw(const Graph& g, std::span<const Vertex> terminals, const OracleBudget& budget = {});

/// Minimum over set partitions of the schools of the summed Steiner tree sizes.
SolveResult sf_partition_oracle(const Instance& inst, const OracleBudget& budget = {});

/// A feasible (not necessarily optimal) forest: union of BFS paths, then a
/// spanning forest of that union. Infeasible iff some pair is disconnected.
SolveResult greedy_forest(const Instance& inst);

}  // namespace sf
