#pragma once

// Brute-force references for the test suites. Nothing here calls into the
// library except for the Graph/Instance value types.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sf/core.hpp"

namespace sft {

using PatternEdges = std::vector<std::pair<int, int>>;

struct SmallPattern {
  int n = 0;
  PatternEdges edges;
};

SmallPattern path_pattern(int vertices);
SmallPattern claw_pattern();
SmallPattern spider_pattern(int a, int b, int c);
SmallPattern union_of(const std::vector<SmallPattern>& parts);

/// Minimum Steiner forest size by trying edge subsets in increasing size.
/// nullopt when some pair is disconnected in the graph.
std::optional<std::size_t> brute_sf(const sf::Instance& inst);

/// Feasibility and value both match brute_sf.
bool same_optimum(const sf::Instance& inst, const sf::SolveResult& r);

/// Own union-find check: every pair connected and the edge set acyclic.
bool brute_is_forest_solution(const sf::Instance& inst, const std::vector<sf::Edge>& edges);

/// Tries every injection of the pattern vertices.
bool brute_contains(const sf::Graph& g, const SmallPattern& p);

std::size_t brute_vertex_cover(const sf::Graph& g);
/// Some set of at most d vertices leaves components of at most c vertices.
bool brute_has_deletion_set(const sf::Graph& g, std::size_t c, std::size_t d);
/// Vertices on a longest simple path.
std::size_t brute_longest_path(const sf::Graph& g);
bool brute_is_cut_vertex(const sf::Graph& g, sf::Vertex v);

/// Rooted trees on z labeled leaves where every internal node has >= 2 children.
std::uint64_t brute_hierarchy_count(std::size_t z);
/// Minimum over all permutations; -1 marks a missing arc, nullopt if none is perfect.
std::optional<std::int64_t> brute_assignment(const std::vector<std::vector<std::int64_t>>& w);

/// Certificate present, valid under the brute checker and of the reported size.
bool certificate_consistent(const sf::Instance& inst, const sf::SolveResult& r);

}  // namespace sft
