#include <algorithm>
#include <bit>

#include "sf/fpt.hpp"

namespace sf {

namespace {

// Hierarchies over the leaf set `mask` (at least two leaves) using at most
// `budget` internal nodes, root first and subtrees in preorder.
void grow(std::uint32_t mask, std::size_t budget, std::vector<Hierarchy>& out) {
  if (budget == 0) return;
  std::vector<std::uint32_t> members;
  for (std::uint32_t m = mask; m; m &= m - 1) members.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
  for_each_set_partition(members.size(), [&](const std::vector<std::size_t>& rgs) {
    const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (blocks < 2) return false;
    std::vector<std::uint32_t> child(blocks, 0);
    for (std::size_t i = 0; i < members.size(); ++i) child[rgs[i]] |= std::uint32_t{1} << members[i];
    // Each child with two or more leaves is itself an internal node.
    std::vector<Hierarchy> partial{Hierarchy{{child}}};
    for (std::uint32_t c : child) {
      if (std::popcount(c) < 2) continue;
      std::vector<Hierarchy> next;
      for (const Hierarchy& h : partial) {
        const std::size_t left = budget - h.internal();
        std::vector<Hierarchy> subs;
        grow(c, left, subs);
        for (Hierarchy& s : subs) {
          Hierarchy combined = h;
          combined.nodes.insert(combined.nodes.end(), s.nodes.begin(), s.nodes.end());
          next.push_back(std::move(combined));
        }
      }
      partial = std::move(next);
      if (partial.empty()) break;
    }
    for (Hierarchy& h : partial) out.push_back(std::move(h));
    return false;
  });
}

}  // namespace

std::vector<Hierarchy> enumerate_hierarchies(std::size_t leaves, std::size_t max_internal) {
  if (leaves > kHierarchyLeafGuard)
    throw SolverError(ErrorKind::guard_exceeded, "enumerate_hierarchies: " + std::to_string(leaves) +
                                                     " leaves exceed guard " + std::to_string(kHierarchyLeafGuard));
  if (leaves == 0) return {};
  if (leaves == 1) return {Hierarchy{}};
  std::vector<Hierarchy> out;
  grow((std::uint32_t{1} << leaves) - 1, max_internal, out);
  return out;
}

void for_each_pattern_forest(const std::vector<std::size_t>& counts, std::size_t max_internal,
                             const std::function<bool(const PatternForest&)>& visit) {
  std::vector<std::vector<Hierarchy>> options;
  for (std::size_t z : counts) options.push_back(enumerate_hierarchies(z, max_internal));
  PatternForest cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == options.size()) return visit(cur);
    for (const Hierarchy& h : options[i]) {
      if (cur.beta + h.internal() > max_internal) continue;
      cur.trees.push_back(h);
      cur.beta += h.internal();
      bool stop = rec(i + 1);
      cur.beta -= h.internal();
      cur.trees.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(0);
}

std::vector<PatternForest> enumerate_pattern_forests(const std::vector<std::size_t>& counts,
                                                     std::size_t max_internal) {
  std::vector<PatternForest> out;
  for_each_pattern_forest(counts, max_internal, [&](const PatternForest& f) {
    out.push_back(f);
    return false;
  });
  return out;
}

}  // namespace sf
