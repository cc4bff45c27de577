#pragma once

// Solvers for the H-subgraph-free classes and the top-level router.

#include <array>
#include <optional>
#include <string>

#include "sf/core.hpp"
#include "sf/kernels.hpp"
#include "sf/oracle.hpp"
#include "sf/subgraph.hpp"

namespace sf {

struct Antares {
  Vertex hub = kNoVertex;
  std::array<Vertex, 3> arms{kNoVertex, kNoVertex, kNoVertex};
};

/// Hub of maximum degree (smallest id on ties) with its three smallest
/// neighbors, or nullopt when the maximum degree is below 3.
std::optional<Antares> find_antares(const Graph& g);

struct Limits {
  std::size_t vertex_cover = 8;     // largest cover tried by the cover route
  std::size_t oracle_edges = 22;    // subset enumeration fallback
  std::size_t peel_depth = 3;       // largest s tried for H + sP2
  std::size_t two_claw_branches = 200000;
  std::size_t two_path_guard = 64;  // per block, for the bounded 2-path solver
  Exec exec = Exec::parallel;
};

struct ClassReport {
  bool max_degree_2 = false;
  bool forest = false;
  std::optional<Embedding> p9;          // witness when not P9-free
  std::optional<Embedding> s114;
  std::optional<Embedding> two_claws;
  std::optional<Embedding> two_claws_p3;
  std::optional<Embedding> two_p4_p3;
  std::optional<std::vector<Vertex>> cover;          // size <= limits.vertex_cover
  std::optional<std::vector<Vertex>> deletion_set;   // 2-deletion set, size <= 2
  /// Per menu pattern H, the smallest s <= peel_depth with G (H + sP2)-free.
  std::vector<std::pair<std::string, std::optional<std::size_t>>> peel;
};

ClassReport classify(const Graph& g, const Limits& limits = {});

/// The four patterns H whose H + sP2 classes the router knows.
std::vector<Pattern> peel_menu();

SolveResult solve_2k13_free(const Instance& inst, const Limits& limits = {});
SolveResult solve_2k13_p3_free(const Instance& inst, const Limits& limits = {});
SolveResult solve_s114_free(const Instance& inst, const Limits& limits = {});
SolveResult solve_p9_free(const Instance& inst, const Limits& limits = {});
SolveResult solve_2p4_p3_free(const Instance& inst, const Limits& limits = {});
/// G must be (H + sP2)-subgraph-free; `base` solves H-subgraph-free instances.
SolveResult solve_sp2_peel(const Instance& inst, const Pattern& H, std::size_t s, const InstanceSolver& base,
                           const Limits& limits = {});

/// A minimum vertex cover of g, given a cover `seed` that bounds its size.
/// Throws precondition if `seed` is not a cover.
std::vector<Vertex> shrink_cover(const Graph& g, const std::vector<Vertex>& seed);

struct Routed {
  SolveResult result;
  std::string route;
};

/// Route names accepted by `solve` besides "auto".
std::vector<std::string> route_names();

/// Classifies and runs the first applicable route ("auto"), or the named one.
/// Throws SolverError(unsupported) when nothing applies.
Routed solve(const Instance& inst, const Limits& limits = {}, const std::string& route = "auto");

}  // namespace sf
