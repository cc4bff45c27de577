#include <algorithm>

#include "sf/kernels.hpp"

namespace sf {

namespace {

SolveResult split_connected(const Instance& inst, const InstanceSolver& inner) {
  if (inst.pairs.empty()) return SolveResult::of({});
  const BlockDecomposition bd = blocks(inst.graph);
  if (bd.blocks.size() <= 1) return inner(inst);

  std::size_t leaf = 0;
  while (bd.block_cuts[leaf].size() != 1) ++leaf;
  const std::vector<Vertex>& block = bd.blocks[leaf];
  const Vertex v = bd.block_cuts[leaf][0];

  std::vector<bool> in_block(inst.num_vertices(), false);
  for (Vertex x : block) in_block[x] = true;
  auto side_one = [&](Vertex x) { return in_block[x] && x != v; };

  std::vector<Pair> first, second;
  for (const Pair& p : inst.pairs) {
    const bool a = side_one(p.u), b = side_one(p.v);
    if (a && b) {
      first.push_back(p);
    } else if (!a && !b) {
      second.push_back(p);
    } else {
      const Vertex inside = a ? p.u : p.v, outside = a ? p.v : p.u;
      first.emplace_back(inside, v);
      if (outside != v) second.emplace_back(v, outside);
    }
  }
  std::vector<Vertex> rest;
  for (Vertex x = 0; x < inst.num_vertices(); ++x)
    if (!side_one(x)) rest.push_back(x);

  DerivedInstance d1 = derive(induced_subgraph(inst.graph, block), first);
  DerivedInstance d2 = derive(induced_subgraph(inst.graph, rest), second);
  SolveResult r1 = lift_result(d1, d1.instance.pairs.empty() ? SolveResult::of({}) : inner(d1.instance));
  if (!r1.feasible) return r1;
  SolveResult r2 = lift_result(d2, split_connected(d2.instance, inner));
  if (!r2.feasible) return r2;
  std::vector<Edge> edges = r1.certificate->edges;
  edges.insert(edges.end(), r2.certificate->edges.begin(), r2.certificate->edges.end());
  return SolveResult::of(make_certificate(std::move(edges)));
}

}  // namespace

SolveResult solve_via_blocks(const Instance& inst, const InstanceSolver& inner) {
  return solve_per_component(inst, [&](const Instance& c) { return split_connected(c, inner); });
}

}  // namespace sf
