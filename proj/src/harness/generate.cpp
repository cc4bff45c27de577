#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sf/harness.hpp"

namespace sf {

namespace {

// Plain modulo and 53-bit coins keep the output identical across standard
// libraries (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n); }
  bool coin(double p) { return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 gen_;
};

struct Builder {
  std::size_t n;
  std::set<Edge> edges;
  void add(Vertex a, Vertex b) {
    if (a != b) edges.emplace(a, b);
  }
};

std::vector<Pair> random_pairs(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<Pair> out;
  if (n < 2) return out;
  for (std::size_t i = 0; i < count; ++i) {
    Vertex s = static_cast<Vertex>(rng.below(n)), t = static_cast<Vertex>(rng.below(n - 1));
    if (t >= s) ++t;
    out.emplace_back(s, t);
  }
  return out;
}

void planted_cover(Rng& rng, const GenSpec& spec, Builder& b, PlantWitness& w) {
  const std::size_t k = std::min(spec.param, spec.n);
  for (Vertex c = 0; c < k; ++c) w.cover.push_back(c);
  for (Vertex a = 0; a < k; ++a)
    for (Vertex c = a + 1; c < k; ++c)
      if (rng.coin(spec.edge_prob)) b.add(a, c);
  for (Vertex x = static_cast<Vertex>(k); x < spec.n; ++x) {
    if (k == 0) break;
    bool any = false;
    for (Vertex c = 0; c < k; ++c)
      if (rng.coin(spec.edge_prob)) {
        b.add(x, c);
        any = true;
      }
    if (!any) b.add(x, static_cast<Vertex>(rng.below(k)));
  }
}

void planted_deletion_set(Rng& rng, const GenSpec& spec, Builder& b, PlantWitness& w) {
  const std::size_t bound = spec.param == 0 ? 2 : spec.param;
  const std::size_t d = std::min<std::size_t>(2, spec.n);
  for (Vertex c = 0; c < d; ++c) w.deletion_set.push_back(c);
  if (d == 2 && rng.coin(spec.edge_prob)) b.add(0, 1);
  for (Vertex x = static_cast<Vertex>(d); x < spec.n;) {
    const std::size_t size = std::min<std::size_t>(1 + rng.below(bound), spec.n - x);
    // A random tree on the piece, each vertex wired to the hubs by coin.
    for (std::size_t i = 1; i < size; ++i) b.add(x + static_cast<Vertex>(i), x + static_cast<Vertex>(rng.below(i)));
    bool any = false;
    for (std::size_t i = 0; i < size; ++i)
      for (Vertex c = 0; c < d; ++c)
        if (rng.coin(spec.edge_prob)) {
          b.add(x + static_cast<Vertex>(i), c);
          any = true;
        }
    if (!any && d > 0) b.add(x, static_cast<Vertex>(rng.below(d)));
    x += static_cast<Vertex>(size);
  }
}

void fan(Rng& rng, const GenSpec& spec, Builder& b, PlantWitness& w) {
  if (spec.n < 2) return;
  w.apex = 0;
  for (Vertex x = 2; x < spec.n; ++x) b.add(x - 1, x);
  bool any = false;
  for (Vertex x = 1; x < spec.n; ++x)
    if (rng.coin(spec.edge_prob)) {
      b.add(0, x);
      any = true;
    }
  if (!any) b.add(0, 1 + static_cast<Vertex>(rng.below(spec.n - 1)));
}

void cycle_path_union(Rng& rng, const GenSpec& spec, Builder& b) {
  for (Vertex x = 0; x < spec.n;) {
    const std::size_t size = std::min<std::size_t>(1 + rng.below(std::max<std::size_t>(spec.n / 2, 1)), spec.n - x);
    for (std::size_t i = 1; i < size; ++i) b.add(x + static_cast<Vertex>(i - 1), x + static_cast<Vertex>(i));
    if (size >= 3 && rng.coin(0.5)) b.add(x, x + static_cast<Vertex>(size - 1));
    x += static_cast<Vertex>(size);
  }
}

void tree_depth3(Rng& rng, const GenSpec& spec, Builder& b, PlantWitness& w) {
  w.depth_parent.assign(spec.n, kNoVertex);
  std::vector<std::size_t> depth(spec.n, 0);
  for (Vertex x = 1; x < spec.n; ++x) {
    std::vector<Vertex> hosts;
    for (Vertex y = 0; y < x; ++y)
      if (depth[y] < 2) hosts.push_back(y);
    if (rng.coin(0.1)) continue;  // new root
    const Vertex p = hosts[rng.below(hosts.size())];
    w.depth_parent[x] = p;
    depth[x] = depth[p] + 1;
    b.add(x, p);
    const Vertex gp = w.depth_parent[p];
    if (gp != kNoVertex && rng.coin(spec.edge_prob)) b.add(x, gp);
  }
}

void h_free(Rng& rng, const GenSpec& spec, Builder& b) {
  if (!spec.pattern) throw SolverError(ErrorKind::contract_violation, "generate: h-free needs a pattern");
  for (Vertex a = 0; a < spec.n; ++a)
    for (Vertex c = a + 1; c < spec.n; ++c)
      if (rng.coin(spec.edge_prob)) b.add(a, c);
  const Pattern& pat = *spec.pattern;
  for (std::size_t it = 0;; ++it) {
    if (it == kRepairIterations)
      throw SolverError(ErrorKind::guard_exceeded, "generate: repair did not converge");
    Graph g(spec.n, {b.edges.begin(), b.edges.end()});
    auto emb = find_embedding(g, pat, pat.vertex_count());
    if (!emb) return;
    b.edges.erase(emb->edges[rng.below(emb->edges.size())]);
  }
}

}  // namespace

Generated generate(const GenSpec& spec) {
  if (spec.edge_prob < 0 || spec.edge_prob > 1)
    throw SolverError(ErrorKind::contract_violation, "generate: edge_prob outside [0, 1]");
  Rng rng(spec.seed);
  Builder b{spec.n, {}};
  Generated out;
  switch (spec.kind) {
    case GenKind::planted_cover: planted_cover(rng, spec, b, out.witness); break;
    case GenKind::planted_deletion_set: planted_deletion_set(rng, spec, b, out.witness); break;
    case GenKind::fan: fan(rng, spec, b, out.witness); break;
    case GenKind::cycle_path_union: cycle_path_union(rng, spec, b); break;
    case GenKind::h_subgraph_free: h_free(rng, spec, b); break;
    case GenKind::tree_depth3: tree_depth3(rng, spec, b, out.witness); break;
  }

  // Random relabeling so planted vertices do not sit at fixed ids.
  std::vector<Vertex> perm(spec.n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = spec.n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Edge> edges;
  for (const Edge& e : b.edges) edges.emplace_back(perm[e.u], perm[e.v]);
  auto relabel = [&](std::vector<Vertex>& vs) {
    for (Vertex& v : vs) v = perm[v];
    std::sort(vs.begin(), vs.end());
  };
  relabel(out.witness.cover);
  relabel(out.witness.deletion_set);
  if (out.witness.apex != kNoVertex) out.witness.apex = perm[out.witness.apex];
  if (!out.witness.depth_parent.empty()) {
    std::vector<Vertex> parent(spec.n, kNoVertex);
    for (Vertex x = 0; x < spec.n; ++x)
      if (out.witness.depth_parent[x] != kNoVertex) parent[perm[x]] = perm[out.witness.depth_parent[x]];
    out.witness.depth_parent = std::move(parent);
  }
  out.instance = Instance(Graph(spec.n, std::move(edges)), random_pairs(rng, spec.n, spec.pair_count));
  return out;
}

GenKind parse_gen_kind(const std::string& name) {
  if (name == "cover") return GenKind::planted_cover;
  if (name == "deletion-set") return GenKind::planted_deletion_set;
  if (name == "fan") return GenKind::fan;
  if (name == "cycle-path") return GenKind::cycle_path_union;
  if (name == "h-free") return GenKind::h_subgraph_free;
  if (name == "tree-depth3") return GenKind::tree_depth3;
  throw SolverError(ErrorKind::contract_violation, "unknown generator kind '" + name + "'");
}

std::string gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::planted_cover: return "cover";
    case GenKind::planted_deletion_set: return "deletion-set";
    case GenKind::fan: return "fan";
    case GenKind::cycle_path_union: return "cycle-path";
    case GenKind::h_subgraph_free: return "h-free";
    case GenKind::tree_depth3: return "tree-depth3";
  }
  return "?";
}

Pattern parse_pattern(const std::string& name) {
  auto bad = [&] { return SolverError(ErrorKind::contract_violation, "unknown pattern '" + name + "'"); };
  std::string core = name;
  std::size_t s = 0;
  if (name.size() > 3 && name.ends_with("P2")) {
    const auto plus = name.rfind('+');
    if (plus == std::string::npos) throw bad();
    const std::string count = name.substr(plus + 1, name.size() - plus - 3);
    if (!std::all_of(count.begin(), count.end(), ::isdigit)) throw bad();
    s = count.empty() ? 1 : std::stoul(count);
    core = name.substr(0, plus);
  }
  Pattern inner = [&]() -> Pattern {
    if (core == "K13") return Pattern::star13();
    if (core == "S114") return patterns::s114();
    if (core == "2K13") return patterns::two_claws();
    if (core == "2K13+P3") return patterns::two_claws_p3();
    if (core == "2P4+P3") return patterns::two_p4_p3();
    if (core.size() >= 2 && core[0] == 'P' && std::all_of(core.begin() + 1, core.end(), ::isdigit))
      return Pattern::path(std::stoul(core.substr(1)));
    throw bad();
  }();
  return s == 0 ? inner : Pattern::plus_p2(inner, s);
}

}  // namespace sf
