#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <unordered_map>

#include "sf/fpt.hpp"
#include "sf/subgraph.hpp"

namespace sf {

LiftedInstance lift_terminals_off_cover(const Instance& inst, std::span<const Vertex> cover) {
  const Graph& g = inst.graph;
  std::vector<Vertex> c(cover.begin(), cover.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (Vertex v : c)
    if (v >= g.num_vertices()) throw SolverError(ErrorKind::contract_violation, "cover vertex out of range");
  if (!is_vertex_cover(g, c)) throw SolverError(ErrorKind::contract_violation, "given set is not a vertex cover");

  std::vector<bool> in_cover(g.num_vertices(), false);
  for (Vertex v : c) in_cover[v] = true;
  const auto terminal = inst.terminal_mask();
  std::vector<Vertex> pendant(g.num_vertices(), kNoVertex);
  std::vector<Edge> edges = g.edges();
  Vertex next = static_cast<Vertex>(g.num_vertices());
  LiftedInstance out;
  for (Vertex v : c)
    if (terminal[v]) {
      pendant[v] = next++;
      edges.emplace_back(v, pendant[v]);
      out.context.pendant_edges.emplace_back(v, pendant[v]);
    }
  std::vector<Pair> pairs;
  auto moved = [&](Vertex x) { return pendant[x] == kNoVertex ? x : pendant[x]; };
  for (const Pair& p : inst.pairs) pairs.emplace_back(moved(p.u), moved(p.v));
  out.instance = Instance(Graph(next, std::move(edges)), std::move(pairs));
  out.context.cover = c;
  out.context.lift_count = out.context.pendant_edges.size();
  for (Vertex v = 0; v < next; ++v)
    if (v >= g.num_vertices() || !in_cover[v]) out.context.remainder.push_back(v);
  out.context.schools = schools_of(out.instance, out.context.remainder);
  return out;
}

namespace {

using Mask = std::uint32_t;
using Key = std::uint64_t;
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
constexpr unsigned kUnused = 15;

struct Cell {
  std::int64_t value = kInf;
  Key prev = 0;
  std::vector<Edge> added;
};
using Layer = std::unordered_map<Key, Cell>;

// Everything that does not depend on the (I0, A) branch.
struct Setup {
  const Graph* g = nullptr;
  std::vector<Vertex> cover;
  std::vector<Mask> cover_adj;            // cover index -> adjacent cover indices
  std::vector<Mask> linked;               // adjacent or sharing a remainder neighbor
  std::vector<std::vector<Vertex>> schools;
  std::size_t terminal_count = 0;
  std::vector<Mask> nbr;                  // vertex -> adjacent cover indices (remainder only)
};

Mask bit(std::size_t i) { return Mask{1} << i; }

Key encode(const std::vector<Mask>& parts, Mask unused, std::size_t k) {
  Key key = 0;
  for (std::size_t c = 0; c < k; ++c) {
    unsigned label = kUnused;
    if (!(unused & bit(c)))
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] & bit(c)) label = static_cast<unsigned>(i);
    key |= Key{label} << (4 * c);
  }
  return key;
}

std::vector<Mask> decode(Key key, std::size_t k) {
  std::vector<Mask> parts;
  for (std::size_t c = 0; c < k; ++c) {
    unsigned label = (key >> (4 * c)) & 15u;
    if (label == kUnused) continue;
    if (parts.size() <= label) parts.resize(label + 1, 0);
    parts[label] |= bit(c);
  }
  return parts;
}

void canonical(std::vector<Mask>& parts) {
  std::sort(parts.begin(), parts.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

bool connected_within(Mask set, const std::vector<Mask>& adj) {
  if (set == 0) return true;
  Mask seen = set & (~set + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

Vertex first_neighbor_in(const Setup& st, Vertex r, Mask target) {
  Mask m = st.nbr[r] & target;
  return st.cover[std::countr_zero(m)];
}

class HierarchyCache {
 public:
  const std::vector<Hierarchy>& get(std::size_t leaves, std::size_t budget) {
    auto key = std::pair(leaves, budget);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, enumerate_hierarchies(leaves, budget)).first;
    return it->second;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Hierarchy>> cache_;
};

class Branch {
 public:
  Branch(const Setup& st, Mask unused, std::vector<Mask> arch) : st_(st), unused_(unused), arch_(std::move(arch)) {
    canonical(arch_);
  }

  SolveResult run() {
    const std::size_t k = st_.cover.size();
    std::vector<Layer> layers;
    layers.push_back(base());
    for (std::size_t s = 0; s < st_.schools.size(); ++s) {
      const bool terminal = s < st_.terminal_count;
      const auto& school = st_.schools[s];
      if (!terminal) {
        // A singleton can only help if it sees two cover vertices of one archipelago.
        bool useful = false;
        for (Mask a : arch_)
          if (std::popcount(st_.nbr[school[0]] & a) >= 2) useful = true;
        if (!useful) continue;
      }
      Layer next = step(layers.back(), school, terminal);
      if (next.empty()) return SolveResult::infeasible();
      layers.push_back(std::move(next));
    }
    const Key goal = encode(arch_, unused_, k);
    auto it = layers.back().find(goal);
    if (it == layers.back().end()) return SolveResult::infeasible();

    std::vector<Edge> edges;
    Key key = goal;
    for (std::size_t s = layers.size() - 1; s > 0; --s) {
      const Cell& cell = layers[s].at(key);
      edges.insert(edges.end(), cell.added.begin(), cell.added.end());
      key = cell.prev;
    }
    for (Mask part : decode(key, k)) spanning_tree(part, edges);
    auto cert = make_certificate(std::move(edges));
    if (static_cast<std::int64_t>(cert.size()) != it->second.value)
      throw SolverError(ErrorKind::contract_violation, "vertex cover DP: certificate size mismatch");
    return SolveResult::of(std::move(cert));
  }

 private:
  void spanning_tree(Mask part, std::vector<Edge>& edges) const {
    Mask seen = part & (~part + 1);
    std::vector<std::size_t> queue{static_cast<std::size_t>(std::countr_zero(seen))};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Mask m = st_.cover_adj[queue[i]] & part & ~seen; m; m &= m - 1) {
        std::size_t c = std::countr_zero(m);
        seen |= bit(c);
        edges.emplace_back(st_.cover[queue[i]], st_.cover[c]);
        queue.push_back(c);
      }
  }

  Layer base() const {
    const std::size_t k = st_.cover.size();
    // Per archipelago, its partitions into connected islands.
    std::vector<std::vector<std::vector<Mask>>> options(arch_.size());
    for (std::size_t a = 0; a < arch_.size(); ++a) {
      std::vector<std::size_t> members;
      for (Mask m = arch_[a]; m; m &= m - 1) members.push_back(std::countr_zero(m));
      for_each_set_partition(members.size(), [&](const std::vector<std::size_t>& rgs) {
        std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Mask> parts(blocks, 0);
        for (std::size_t i = 0; i < members.size(); ++i) parts[rgs[i]] |= bit(members[i]);
        for (Mask p : parts)
          if (!connected_within(p, st_.cover_adj)) return false;
        options[a].push_back(std::move(parts));
        return false;
      });
    }
    Layer layer;
    std::vector<Mask> cur;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t a, std::int64_t cost) {
      if (a == arch_.size()) {
        std::vector<Mask> parts = cur;
        canonical(parts);
        layer.emplace(encode(parts, unused_, k), Cell{cost, 0, {}});
        return;
      }
      for (const auto& parts : options[a]) {
        std::int64_t c = cost;
        for (Mask p : parts) c += std::popcount(p) - 1;
        const std::size_t before = cur.size();
        cur.insert(cur.end(), parts.begin(), parts.end());
        rec(a + 1, c);
        cur.resize(before);
      }
    };
    rec(0, 0);
    return layer;
  }

  static void offer(Layer& layer, Key key, std::int64_t value, Key prev, std::vector<Edge> added) {
    auto it = layer.find(key);
    if (it == layer.end()) {
      layer.emplace(key, Cell{value, prev, std::move(added)});
    } else if (value < it->second.value) {
      it->second = Cell{value, prev, std::move(added)};
    }
  }

  Layer step(const Layer& prev, const std::vector<Vertex>& school, bool terminal) {
    const std::size_t k = st_.cover.size();
    const std::size_t alpha = school.size();
    // Archipelagos the whole school can reach.
    std::vector<std::size_t> reachable;
    for (std::size_t a = 0; a < arch_.size(); ++a) {
      bool all = true;
      for (Vertex r : school)
        if (!(st_.nbr[r] & arch_[a])) all = false;
      if (all) reachable.push_back(a);
    }
    Layer next;
    if (terminal && reachable.empty()) return next;

    // Deterministic order over the previous layer.
    std::vector<Key> keys;
    keys.reserve(prev.size());
    for (const auto& [key, cell] : prev) keys.push_back(key);
    std::sort(keys.begin(), keys.end());

    for (Key key : keys) {
      const Cell& cell = prev.at(key);
      // The school stays outside every merge.
      if (terminal) {
        std::vector<Edge> added;
        for (Vertex r : school) added.emplace_back(r, first_neighbor_in(st_, r, arch_[reachable.front()]));
        offer(next, key, cell.value + static_cast<std::int64_t>(alpha), key, std::move(added));
      } else {
        offer(next, key, cell.value, key, {});
      }
      const std::vector<Mask> parts = decode(key, k);
      for (std::size_t a : reachable) distill(next, key, cell.value, parts, a, school, terminal);
    }
    return next;
  }

  // Transitions that merge parts of `parts` inside archipelago `a` using the school.
  void distill(Layer& next, Key key, std::int64_t base_value, const std::vector<Mask>& parts, std::size_t a,
               const std::vector<Vertex>& school, bool terminal) {
    const std::size_t k = st_.cover.size();
    const std::size_t alpha = school.size();
    Mask school_nbr = 0;
    for (Vertex r : school) school_nbr |= st_.nbr[r];
    std::vector<std::size_t> touch;  // indices into parts
    for (std::size_t i = 0; i < parts.size(); ++i)
      if ((parts[i] & arch_[a]) && (parts[i] & school_nbr)) touch.push_back(i);
    if (touch.size() < 2) return;

    for_each_set_partition(touch.size(), [&](const std::vector<std::size_t>& rgs) {
      const std::size_t groups = *std::max_element(rgs.begin(), rgs.end()) + 1;
      if (groups == touch.size()) return false;  // nothing merged
      std::vector<std::vector<std::size_t>> members(groups);
      for (std::size_t i = 0; i < touch.size(); ++i) members[rgs[i]].push_back(touch[i]);
      std::vector<std::size_t> merged;  // groups of size >= 2
      for (std::size_t gi = 0; gi < groups; ++gi)
        if (members[gi].size() >= 2) merged.push_back(gi);
      if (merged.size() > alpha) return false;

      std::vector<Mask> coarse;
      std::vector<bool> absorbed(parts.size(), false);
      for (std::size_t gi : merged) {
        Mask m = 0;
        for (std::size_t i : members[gi]) {
          m |= parts[i];
          absorbed[i] = true;
        }
        coarse.push_back(m);
      }
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (!absorbed[i]) coarse.push_back(parts[i]);
      canonical(coarse);
      const Key target = encode(coarse, unused_, k);

      // Choose one hierarchy per merged group, then assign school vertices.
      std::vector<const Hierarchy*> chosen(merged.size());
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t t, std::size_t used) {
        if (t == merged.size()) {
          assign(next, key, target, base_value, parts, members, merged, chosen, used, a, school, terminal);
          return;
        }
        const auto& group = members[merged[t]];
        const std::size_t room = alpha - used - (merged.size() - t - 1);
        for (const Hierarchy& h : cache_.get(group.size(), room)) {
          chosen[t] = &h;
          rec(t + 1, used + h.internal());
        }
      };
      rec(0, 0);
      return false;
    });
  }

  void assign(Layer& next, Key key, Key target, std::int64_t base_value, const std::vector<Mask>& parts,
              const std::vector<std::vector<std::size_t>>& members, const std::vector<std::size_t>& merged,
              const std::vector<const Hierarchy*>& chosen, std::size_t beta, std::size_t a,
              const std::vector<Vertex>& school, bool terminal) {
    const std::size_t alpha = school.size();
    // Columns: one per internal node (its children's cover sets), then fillers.
    std::vector<std::vector<Mask>> columns;
    for (std::size_t t = 0; t < merged.size(); ++t) {
      const auto& group = members[merged[t]];
      for (const auto& node : chosen[t]->nodes) {
        std::vector<Mask> children;
        for (std::uint32_t leaves : node) {
          Mask m = 0;
          for (std::uint32_t l = leaves; l; l &= l - 1) m |= parts[group[std::countr_zero(l)]];
          children.push_back(m);
        }
        columns.push_back(std::move(children));
      }
    }
    std::vector<std::vector<std::int64_t>> w(alpha, std::vector<std::int64_t>(alpha, kNoArc));
    for (std::size_t r = 0; r < alpha; ++r) {
      const Mask nb = st_.nbr[school[r]];
      for (std::size_t c = 0; c < beta; ++c) {
        bool ok = true;
        for (Mask child : columns[c])
          if (!(nb & child)) ok = false;
        if (ok) w[r][c] = static_cast<std::int64_t>(columns[c].size());
      }
      if (nb & arch_[a])
        for (std::size_t c = beta; c < alpha; ++c) w[r][c] = terminal ? 1 : 0;
    }
    const Assignment m = min_weight_perfect_matching(w);
    if (!m.feasible) return;
    const std::int64_t value = base_value + m.weight;
    auto it = next.find(target);
    if (it != next.end() && it->second.value <= value) return;
    std::vector<Edge> added;
    for (std::size_t r = 0; r < alpha; ++r) {
      const Vertex x = school[r];
      const std::size_t c = m.mate[r];
      if (c < beta) {
        for (Mask child : columns[c]) added.emplace_back(x, first_neighbor_in(st_, x, child));
      } else if (terminal) {
        added.emplace_back(x, first_neighbor_in(st_, x, arch_[a]));
      }
    }
    offer(next, target, value, key, std::move(added));
  }

  const Setup& st_;
  Mask unused_;
  std::vector<Mask> arch_;
  HierarchyCache cache_;
};

// Necessary conditions for (I0, A) to carry an optimal forest.
bool promising(const Setup& st, const std::vector<Mask>& arch) {
  if (arch.size() > st.terminal_count) return false;
  std::vector<bool> hosts(arch.size(), false);
  for (std::size_t s = 0; s < st.terminal_count; ++s) {
    bool any = false;
    for (std::size_t a = 0; a < arch.size(); ++a) {
      bool all = true;
      for (Vertex r : st.schools[s])
        if (!(st.nbr[r] & arch[a])) all = false;
      if (all) any = hosts[a] = true;
    }
    if (!any) return false;
  }
  for (std::size_t a = 0; a < arch.size(); ++a)
    if (!hosts[a] || !connected_within(arch[a], st.linked)) return false;
  return true;
}

}  // namespace

SolveResult solve_vertex_cover_fpt(const Instance& inst, std::span<const Vertex> cover, Exec exec) {
  if (cover.size() > kCoverGuard)
    throw SolverError(ErrorKind::guard_exceeded, "solve_vertex_cover_fpt: cover of size " +
                                                     std::to_string(cover.size()) + " exceeds guard " +
                                                     std::to_string(kCoverGuard));
  LiftedInstance lifted = lift_terminals_off_cover(inst, cover);
  if (!pairs_connected(inst)) return SolveResult::infeasible();
  if (inst.pairs.empty()) return SolveResult::of({});

  const Graph& g = lifted.instance.graph;
  Setup st;
  st.g = &g;
  st.cover = lifted.context.cover;
  const std::size_t k = st.cover.size();
  std::vector<std::size_t> index(g.num_vertices(), k);
  for (std::size_t i = 0; i < k; ++i) index[st.cover[i]] = i;
  st.cover_adj.assign(k, 0);
  st.nbr.assign(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    const std::size_t a = index[e.u], b = index[e.v];
    if (a < k && b < k) {
      st.cover_adj[a] |= bit(b);
      st.cover_adj[b] |= bit(a);
    } else if (a < k) {
      st.nbr[e.v] |= bit(a);
    } else if (b < k) {
      st.nbr[e.u] |= bit(b);
    }
  }
  st.linked = st.cover_adj;
  for (Vertex r : lifted.context.remainder)
    for (Mask m = st.nbr[r]; m; m &= m - 1) st.linked[std::countr_zero(m)] |= st.nbr[r];
  st.schools = lifted.context.schools.schools;
  st.terminal_count = lifted.context.schools.terminal_count;

  // Branches: set partitions of C plus a marker; the marker's block is I0.
  std::vector<std::pair<Mask, std::vector<Mask>>> branches;
  for_each_set_partition(k + 1, [&](const std::vector<std::size_t>& rgs) {
    const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Mask> parts(blocks, 0);
    for (std::size_t i = 0; i < k; ++i) parts[rgs[i]] |= bit(i);
    const Mask unused = parts[rgs[k]];
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(rgs[k]));
    if (promising(st, parts)) branches.emplace_back(unused, std::move(parts));
    return false;
  });

  std::vector<SolveResult> results(branches.size());
  parallel_for(branches.size(), exec,
               [&](std::size_t i) { results[i] = Branch(st, branches[i].first, branches[i].second).run(); });
  SolveResult best;
  for (auto& r : results) keep_better(best, std::move(r));
  if (!best.feasible) return best;

  // Drop the pendant edges; everything else is an original edge.
  std::vector<Edge> edges;
  for (const Edge& e : best.certificate->edges)
    if (e.v < inst.num_vertices()) edges.push_back(e);
  auto cert = make_certificate(std::move(edges));
  if (cert.size() + lifted.context.lift_count != best.value)
    throw SolverError(ErrorKind::contract_violation, "vertex cover DP: pendant edges missing from certificate");
  return SolveResult::of(std::move(cert));
}

}  // namespace sf
