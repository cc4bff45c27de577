#include <algorithm>
#include <map>
#include <memory>

#include "sf/kernels.hpp"

namespace sf {

std::vector<BranchPlan> branch_two_path(const Instance& inst, const std::vector<Vertex>& p) {
  const Graph& g = inst.graph;
  if (!is_two_path(g, p)) throw SolverError(ErrorKind::contract_violation, "branch_two_path: not a 2-path");
  const std::size_t L = p.size() - 1;
  const Vertex u = p.front(), v = p.back();
  std::vector<BranchPlan> plans;

  std::vector<Edge> path_edges;
  for (std::size_t i = 1; i <= L; ++i) path_edges.emplace_back(p[i - 1], p[i]);

  {
    BranchPlan plan;
    plan.kind = BranchPlan::Kind::contracted;
    plan.derived = derive(contract_vertices(g, p), inst.pairs);
    plan.weight = L;
    plan.fixed_edges = path_edges;
    plans.push_back(std::move(plan));
  }

  // index on the path, or L+1 when off the path
  std::vector<std::size_t> at(g.num_vertices(), L + 1);
  for (std::size_t i = 0; i <= L; ++i) at[p[i]] = i;
  const std::vector<Vertex> inner(p.begin() + 1, p.end() - 1);
  GraphEdit base = delete_vertices(g, inner);
  if (g.has_edge(u, v) && L == 1) {
    // The single edge itself is removed; u and v stay.
    const Edge only[1] = {Edge(u, v)};
    base = delete_edges(g, only);
  }

  std::map<std::string, std::size_t> seen;  // derived key -> plan index
  for (std::size_t i = 1; i <= L; ++i)
    for (std::size_t j = i; j <= L; ++j) {
      // Vertices p_0..p_{i-1} join u, p_j..p_L join v, p_i..p_{j-1} form the interior.
      auto zone = [&](Vertex x) -> int {
        std::size_t k = at[x];
        if (k > L) return 3;
        if (k < i) return 0;
        if (k >= j) return 2;
        return 1;
      };
      bool dead = false;
      std::vector<Pair> outer, interior;
      for (const Pair& q : inst.pairs) {
        int a = zone(q.u), b = zone(q.v);
        if ((a == 1) != (b == 1)) {
          dead = true;
          break;
        }
        if (a == 1) {
          interior.push_back(q);
          continue;
        }
        auto lift = [&](Vertex x, int z) { return z == 0 ? u : z == 2 ? v : x; };
        Vertex s = lift(q.u, a), t = lift(q.v, b);
        if (s != t) outer.emplace_back(s, t);
      }
      if (dead) continue;

      BranchPlan plan;
      plan.kind = BranchPlan::Kind::cut;
      plan.e = path_edges[i - 1];
      plan.f = path_edges[j - 1];
      for (std::size_t k = 1; k < i; ++k) plan.fixed_edges.push_back(path_edges[k - 1]);
      for (std::size_t k = j + 1; k <= L; ++k) plan.fixed_edges.push_back(path_edges[k - 1]);
      if (!interior.empty()) {
        const std::vector<Vertex> piece(p.begin() + static_cast<std::ptrdiff_t>(i),
                                        p.begin() + static_cast<std::ptrdiff_t>(j));
        DerivedInstance d = derive(induced_subgraph(g, piece), interior);
        SolveResult r = lift_result(d, sf_on_forest(d.instance));
        plan.fixed_edges.insert(plan.fixed_edges.end(), r.certificate->edges.begin(), r.certificate->edges.end());
      }
      plan.weight = plan.fixed_edges.size();
      plan.derived = derive(base, outer);
      std::sort(plan.fixed_edges.begin(), plan.fixed_edges.end());

      const std::string key = canonical_key(plan.derived.instance);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, plans.size());
        plans.push_back(std::move(plan));
      } else {
        BranchPlan& old = plans[it->second];
        if (std::pair(plan.weight, plan.fixed_edges) < std::pair(old.weight, old.fixed_edges)) old = std::move(plan);
      }
    }
  return plans;
}

SolveResult solve_branch(const BranchPlan& plan, const InstanceSolver& solver) {
  return lift_result(plan.derived, solver(plan.derived.instance), plan.fixed_edges);
}

namespace {

class BoundedTwoPaths {
 public:
  explicit BoundedTwoPaths(std::size_t guard) : guard_(guard) {}

  SolveResult solve(const Instance& inst) {
    const std::string key = canonical_key(inst);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SolveResult r = solve_via_blocks(inst, [this](const Instance& b) { return block(b); });
    memo_.emplace(key, r);
    return r;
  }

 private:
  SolveResult block(const Instance& inst) {
    if (inst.graph.max_degree() <= 2) return sf_on_cycle_path_union(inst);
    const TwoPathReport report = maximal_two_paths(inst.graph);
    std::vector<const TwoPath*> qualifying;
    for (const TwoPath& p : report.paths)
      if (p.front_degree > 2 && p.back_degree > 2 && !p.closed()) qualifying.push_back(&p);
    if (qualifying.size() > guard_)
      throw SolverError(ErrorKind::guard_exceeded, "solve_bounded_two_paths: " + std::to_string(qualifying.size()) +
                                                       " maximal 2-paths exceed guard " + std::to_string(guard_));
    if (qualifying.empty())
      throw SolverError(ErrorKind::precondition, "solve_bounded_two_paths: block without a branchable 2-path");
    SolveResult best;
    for (const BranchPlan& plan : branch_two_path(inst, qualifying.front()->vertices))
      keep_better(best, solve_branch(plan, [this](const Instance& d) { return solve(d); }));
    return best;
  }

  std::size_t guard_;
  std::map<std::string, SolveResult> memo_;
};

}  // namespace

SolveResult solve_bounded_two_paths(const Instance& inst, std::size_t k_guard) {
  BoundedTwoPaths solver(k_guard);
  return solver.solve(inst);
}

}  // namespace sf
