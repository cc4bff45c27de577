#pragma once

// Instance generators with planted structure and the SFP text format.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sf/core.hpp"
#include "sf/subgraph.hpp"

namespace sf {

enum class GenKind {
  planted_cover,         // vertex cover of size `param`
  planted_deletion_set,  // two vertices whose removal leaves components of size <= `param` (default 2)
  fan,
  cycle_path_union,
  h_subgraph_free,       // G(n, p) repaired until `pattern` has no copy
  tree_depth3,
};

struct GenSpec {
  GenKind kind = GenKind::planted_cover;
  std::size_t n = 10;
  double edge_prob = 0.3;
  std::size_t pair_count = 3;
  std::uint64_t seed = 1;
  std::size_t param = 0;                // cover size or component bound, see GenKind
  std::optional<Pattern> pattern;       // for h_subgraph_free
};

struct PlantWitness {
  std::vector<Vertex> cover;         // planted_cover
  std::vector<Vertex> deletion_set;  // planted_deletion_set
  Vertex apex = kNoVertex;           // fan
  std::vector<Vertex> depth_parent;  // tree_depth3: parent in the rooted forest, kNoVertex for roots
};

struct Generated {
  Instance instance;
  PlantWitness witness;
};

inline constexpr std::size_t kRepairIterations = 10000;

/// Deterministic for a given spec. Throws contract_violation on a bad spec and
/// guard_exceeded if repair does not converge.
Generated generate(const GenSpec& spec);

/// Parses "gen --kind" names: cover, deletion-set, fan, cycle-path, h-free, tree-depth3.
GenKind parse_gen_kind(const std::string& name);
std::string gen_kind_name(GenKind kind);
/// Parses pattern names used on the command line: P<k>, K13, S114, 2K13, 2K13+P3, 2P4+P3,
/// optionally followed by +<s>P2.
Pattern parse_pattern(const std::string& name);

struct Parsed {
  Instance instance;
  std::vector<std::string> warnings;
};

/// SFP v1 (1-indexed, '#' comments). Throws SolverError(parse) with a line number.
Parsed parse_instance(const std::string& text);
/// Normalized SFP v1 text.
std::string write_instance(const Instance& inst);

/// One "E u v" line per edge, 1-indexed.
std::string write_certificate(const ForestCertificate& cert);
ForestCertificate parse_certificate(const std::string& text, std::size_t num_vertices);

}  // namespace sf
