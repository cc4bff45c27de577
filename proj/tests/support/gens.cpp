#include "gens.hpp"

#include <algorithm>

namespace sft {

sf::Graph graph_of(std::size_t n, std::initializer_list<std::pair<sf::Vertex, sf::Vertex>> edges) {
  std::vector<sf::Edge> out;
  for (auto [a, b] : edges) out.emplace_back(a, b);
  return sf::Graph(n, std::move(out));
}

sf::Graph path_graph(std::size_t n) {
  EdgeSet s{n, {}};
  for (std::size_t i = 1; i < n; ++i) s.add(i - 1, i);
  return s.graph();
}

sf::Graph cycle_graph(std::size_t n) {
  EdgeSet s{n, {}};
  for (std::size_t i = 0; i < n; ++i) s.add(i, (i + 1) % n);
  return s.graph();
}

sf::Graph complete_graph(std::size_t n) {
  EdgeSet s{n, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) s.add(a, b);
  return s.graph();
}

sf::Graph star_graph(std::size_t leaves) {
  EdgeSet s{leaves + 1, {}};
  for (std::size_t i = 1; i <= leaves; ++i) s.add(0, i);
  return s.graph();
}

std::vector<sf::Pair> random_pairs(Rand& r, std::size_t n, std::size_t count) {
  std::vector<sf::Pair> out;
  if (n < 2) return out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = r.below(n);
    auto t = r.below(n - 1);
    if (t >= s) ++t;
    out.emplace_back(static_cast<sf::Vertex>(s), static_cast<sf::Vertex>(t));
  }
  return out;
}

sf::Instance with_pairs(Rand& r, sf::Graph g, std::size_t count) {
  const auto n = g.num_vertices();
  return sf::Instance(std::move(g), random_pairs(r, n, count));
}

sf::Graph random_graph(Rand& r, std::size_t n, double p) {
  EdgeSet s{n, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (r.coin(p)) s.add(a, b);
  return s.graph();
}

namespace {

void tree_into(Rand& r, EdgeSet& s, std::size_t first, std::size_t count) {
  for (std::size_t i = 1; i < count; ++i) s.add(first + i, first + r.below(i));
}

void extra_into(Rand& r, EdgeSet& s, std::size_t first, std::size_t count, std::size_t extra) {
  if (count < 2) return;
  for (std::size_t i = 0; i < extra; ++i) s.add(first + r.below(count), first + r.below(count));
}

}  // namespace

sf::Graph random_connected(Rand& r, std::size_t n, std::size_t extra) {
  EdgeSet s{n, {}};
  tree_into(r, s, 0, n);
  extra_into(r, s, 0, n, extra);
  return s.graph();
}

sf::Graph cut_vertex_graph(Rand& r, std::size_t n1, std::size_t n2, std::size_t extra) {
  // Second piece reuses vertex n1-1 as its first vertex.
  EdgeSet s{n1 + n2 - 1, {}};
  tree_into(r, s, 0, n1);
  extra_into(r, s, 0, n1, extra);
  tree_into(r, s, n1 - 1, n2);
  extra_into(r, s, n1 - 1, n2, extra);
  return s.graph();
}

sf::Graph planted_cover(Rand& r, std::size_t n, std::size_t k, double p) {
  k = std::min(k, n);
  EdgeSet s{n, {}};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (r.coin(p)) s.add(a, b);
  for (std::size_t x = k; x < n && k > 0; ++x) {
    bool any = false;
    for (std::size_t c = 0; c < k; ++c)
      if (r.coin(p)) {
        s.add(x, c);
        any = true;
      }
    if (!any) s.add(x, r.below(k));
  }
  return s.graph();
}

sf::Graph planted_two_hubs(Rand& r, std::size_t n, std::size_t piece, double p) {
  EdgeSet s{n, {}};
  if (r.coin(0.5)) s.add(0, 1);
  for (std::size_t x = 2; x < n;) {
    const std::size_t size = std::min(r.range(1, piece), n - x);
    tree_into(r, s, x, size);
    bool any = false;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t h = 0; h < 2; ++h)
        if (r.coin(p)) {
          s.add(x + i, h);
          any = true;
        }
    if (!any) s.add(x, r.below(2));
    x += size;
  }
  return s.graph();
}

sf::Graph fan_graph(Rand& r, std::size_t path, double p) {
  EdgeSet s{path + 1, {}};
  for (std::size_t x = 2; x <= path; ++x) s.add(x - 1, x);
  bool any = false;
  for (std::size_t x = 1; x <= path; ++x)
    if (r.coin(p)) {
      s.add(0, x);
      any = true;
    }
  if (!any) s.add(0, r.range(1, path));
  return s.graph();
}

sf::Graph cycles_and_paths(Rand& r, std::size_t n) {
  EdgeSet s{n, {}};
  for (std::size_t x = 0; x < n;) {
    const std::size_t size = std::min(r.range(1, 6), n - x);
    for (std::size_t i = 1; i < size; ++i) s.add(x + i - 1, x + i);
    if (size >= 3 && r.coin(0.6)) s.add(x, x + size - 1);
    x += size;
  }
  return s.graph();
}

sf::Graph depth_three(Rand& r, std::size_t n, double closure) {
  EdgeSet s{n, {}};
  std::vector<std::size_t> parent(n, n), depth(n, 0);
  for (std::size_t x = 1; x < n; ++x) {
    if (r.coin(0.15)) continue;
    std::vector<std::size_t> hosts;
    for (std::size_t y = 0; y < x; ++y)
      if (depth[y] < 2) hosts.push_back(y);
    const std::size_t p = hosts[r.below(hosts.size())];
    parent[x] = p;
    depth[x] = depth[p] + 1;
    s.add(x, p);
    if (parent[p] != n && r.coin(closure)) s.add(x, parent[p]);
  }
  return s.graph();
}

sf::Graph wheel_like(Rand& r, std::size_t rim, std::size_t min_spokes) {
  EdgeSet s{rim + 1, {}};
  for (std::size_t i = 0; i < rim; ++i) s.add(1 + i, 1 + (i + 1) % rim);
  std::vector<std::size_t> order(rim);
  for (std::size_t i = 0; i < rim; ++i) order[i] = 1 + i;
  for (std::size_t i = rim; i > 1; --i) std::swap(order[i - 1], order[r.below(i)]);
  const std::size_t spokes = r.range(std::min(min_spokes, rim), rim);
  for (std::size_t i = 0; i < spokes; ++i) s.add(0, order[i]);
  return s.graph();
}

sf::Graph two_claws_attached(Rand& r, std::size_t extra) {
  EdgeSet s{8, {}};
  for (std::size_t leaf = 1; leaf <= 3; ++leaf) s.add(0, leaf), s.add(4, 4 + leaf);
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t root = r.coin(0.5) ? 0 : 4;
    const std::size_t size = r.range(1, 3);
    std::size_t prev = root;
    for (std::size_t j = 0; j < size; ++j) {
      const std::size_t v = s.fresh();
      s.add(prev, v);
      prev = v;
    }
  }
  if (r.coin(0.5)) s.add(r.range(1, 3), r.range(5, 7));
  return s.graph();
}

sf::Graph p9_with_pendants(Rand& r, std::size_t pendants) {
  EdgeSet s{9, {}};
  for (std::size_t i = 1; i < 9; ++i) s.add(i - 1, i);
  for (std::size_t i = 0; i < pendants; ++i) s.add(r.range(2, 6), s.fresh());
  if (r.coin(0.5)) s.add(r.range(0, 8), r.range(0, 8));
  return s.graph();
}

sf::Graph p8_with_hubs(Rand& r) {
  EdgeSet s{8, {}};
  for (std::size_t i = 1; i < 8; ++i) s.add(i - 1, i);
  for (std::size_t k = r.range(1, 3); k > 0; --k) {
    const auto a = s.fresh();
    s.add(a, 2);
    if (r.coin(0.5)) {
      const auto b = s.fresh();
      s.add(a, b);
      s.add(b, 5);
    } else {
      s.add(a, 5);
    }
  }
  return s.graph();
}

sf::Graph spider_planted(Rand& r, std::size_t extra, double p) {
  EdgeSet s{6, {}};
  s.add(0, 1), s.add(0, 2), s.add(0, 3), s.add(3, 4), s.add(4, 5);
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t v = s.fresh();
    bool any = false;
    for (std::size_t u = 0; u < v; ++u)
      if (r.coin(p)) {
        s.add(u, v);
        any = true;
      }
    if (!any) s.add(v, r.below(v));
  }
  return s.graph();
}

}  // namespace sft
