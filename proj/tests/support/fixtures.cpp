#include "support/fixtures.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace fixtures {

namespace {

std::string num_name(int i) { return "v" + std::to_string(i + 1); }

pg::Pathograph blank_graph(int n) {
  pg::Pathograph g;
  for (int i = 0; i < n; ++i) g.add_vertex(num_name(i));
  return g;
}

}  // namespace

pg::Pathograph path_graph(int n) {
  pg::Pathograph g = blank_graph(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

pg::Pathograph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  pg::Pathograph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

pg::Pathograph complete_graph(int n) {
  pg::Pathograph g = blank_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

pg::Pathograph complete_bipartite(int a, int b) {
  pg::Pathograph g;
  for (int i = 0; i < a; ++i) g.add_vertex("a" + std::to_string(i + 1));
  for (int j = 0; j < b; ++j) g.add_vertex("b" + std::to_string(j + 1));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

pg::Pathograph paw_graph() {
  pg::Pathograph g = complete_graph(3);
  pg::VertexId p = g.add_vertex("v4");
  g.add_edge(0, p);
  return g;
}

pg::Pathograph prism_graph() {
  pg::Pathograph g = blank_graph(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

pg::Pathograph wheel_graph(int rim) {
  pg::Pathograph g = cycle_graph(rim);
  pg::VertexId hub = g.add_vertex("hub");
  for (int i = 0; i < rim; ++i) g.add_edge(i, hub);
  return g;
}

pg::Pathograph spoked_square() {
  pg::Pathograph g;
  pg::VertexId a = g.add_vertex("a");
  pg::VertexId b = g.add_vertex("b");
  pg::VertexId c = g.add_vertex("c");
  pg::VertexId d = g.add_vertex("d");
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.add_edge(c, d);
  g.add_edge(d, a);
  pg::UrpathId u = g.add_urpath("u1", a, c);
  g.add_spoke(b, u);
  g.add_spoke(d, u);
  return g;
}

pg::Pathograph hub_two_arcs() {
  pg::Pathograph g;
  pg::VertexId x = g.add_vertex("X");
  pg::VertexId y = g.add_vertex("Y");
  pg::VertexId z = g.add_vertex("Z");
  g.add_edge(x, z);
  g.add_edge(y, z);
  g.add_urpath("u1", x, y);
  pg::UrpathId u2 = g.add_urpath("u2", x, y);
  g.add_spoke(z, u2);
  return g;
}

pg::Pathograph graph_from_mask(int n, uint64_t mask) {
  pg::Pathograph g = blank_graph(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

const std::vector<pg::Pathograph>& iso_representatives(int n) {
  static std::map<int, std::vector<pg::Pathograph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1 || n > 7) throw std::invalid_argument("iso_representatives: n out of range");

  // Breadth-first over edge counts: start from the edgeless graph and add one
  // edge at a time, deduplicating by canonical form at each level.
  std::vector<pg::Pathograph> reps;
  std::set<std::string> seen;
  std::vector<pg::Pathograph> level{blank_graph(n)};
  seen.insert(pg::canonical_key(level[0]));
  while (!level.empty()) {
    for (const pg::Pathograph& g : level) reps.push_back(g);
    std::vector<pg::Pathograph> next;
    for (const pg::Pathograph& g : level) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (g.has_edge(i, j)) continue;
          pg::Pathograph h = g;
          h.add_edge(i, j);
          if (seen.insert(pg::canonical_key(h)).second) next.push_back(h);
        }
      }
    }
    level = std::move(next);
  }
  auto [pos, inserted] = cache.emplace(n, std::move(reps));
  (void)inserted;
  return pos->second;
}

namespace {

int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::vector<std::pair<pg::VertexId, pg::VertexId>> nonadjacent_pairs(const pg::Pathograph& g) {
  std::vector<std::pair<pg::VertexId, pg::VertexId>> out;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (!g.has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace

pg::Pathograph random_rungless(std::mt19937& rng, int max_verts, int max_urpaths) {
  for (;;) {
    int n = pick(rng, 2, max_verts);
    pg::Pathograph g = blank_graph(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng, 0.5)) g.add_edge(i, j);
    auto pairs = nonadjacent_pairs(g);
    if (pairs.empty()) continue;  // force at least one urpath
    int want = pick(rng, 1, max_urpaths);
    for (int k = 0; k < want; ++k) {
      auto [a, b] = pairs[pick(rng, 0, static_cast<int>(pairs.size()) - 1)];
      g.add_urpath("u" + std::to_string(k + 1), a, b);
    }
    for (pg::UrpathId u = 0; u < g.urpath_count(); ++u)
      for (pg::VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.is_endpoint_of(v, u) && coin(rng, 0.3)) g.add_spoke(v, u);
    if (pg::validate(g).empty()) return g;
  }
}

pg::Pathograph random_one_rung(std::mt19937& rng, int max_verts, int max_spokes) {
  for (;;) {
    int n = pick(rng, 2, max_verts);
    pg::Pathograph g = blank_graph(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng, 0.4)) g.add_edge(i, j);
    auto pairs = nonadjacent_pairs(g);
    if (pairs.empty()) continue;
    for (int k = 0; k < 2; ++k) {
      auto [a, b] = pairs[pick(rng, 0, static_cast<int>(pairs.size()) - 1)];
      g.add_urpath("u" + std::to_string(k + 1), a, b);
    }
    g.add_rung(0, 1);
    int budget = pick(rng, 0, max_spokes);
    for (int k = 0; k < budget; ++k) {
      pg::VertexId v = pick(rng, 0, n - 1);
      pg::UrpathId u = pick(rng, 0, 1);
      if (!g.is_endpoint_of(v, u)) g.add_spoke(v, u);
    }
    if (pg::validate(g).empty()) return g;
  }
}

}  // namespace fixtures
