#include <limits>

#include "sf/fpt.hpp"

namespace sf {

// Shortest augmenting paths with vertex potentials (Kuhn-Munkres, O(n^3)).
// Missing arcs get a cost larger than any perfect matching over real arcs,
// so the optimum uses one only when no perfect matching exists.
Assignment min_weight_perfect_matching(const std::vector<std::vector<std::int64_t>>& weights) {
  const std::size_t n = weights.size();
  for (const auto& row : weights)
    if (row.size() != n) throw SolverError(ErrorKind::contract_violation, "matching: cost matrix is not square");
  Assignment out;
  if (n == 0) {
    out.feasible = true;
    return out;
  }
  std::int64_t big = 1;
  for (const auto& row : weights)
    for (std::int64_t w : row)
      if (w != kNoArc) {
        if (w < 0) throw SolverError(ErrorKind::contract_violation, "matching: negative weight");
        big += w;
      }
  auto cost = [&](std::size_t i, std::size_t j) { return weights[i][j] == kNoArc ? big : weights[i][j]; };

  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based arrays; p[j] is the row matched to column j, row 0 is virtual.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  out.mate.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.mate[p[j] - 1] = j - 1;
  out.feasible = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i][out.mate[i]] == kNoArc) {
      out.feasible = false;
      out.mate.clear();
      out.weight = 0;
      return out;
    }
    out.weight += weights[i][out.mate[i]];
  }
  return out;
}

}  // namespace sf
