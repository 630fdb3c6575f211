#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathograph/core.hpp"
#include "pathograph/truemper.hpp"
#include "support/fixtures.hpp"

using namespace pg;
using namespace fixtures;

namespace {

// Rebuild p with vertices declared in permuted order (relabeling test aid).
Pathograph permuted_copy(const Pathograph& p, const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  Pathograph q;
  for (size_t i = 0; i < perm.size(); ++i) q.add_vertex(p.vertex_names[perm[i]]);
  for (auto [a, b] : p.edges) q.add_edge(inv[a], inv[b]);
  for (int u = 0; u < p.urpath_count(); ++u)
    q.add_urpath(p.urpath_names[u], inv[p.urpath_ends[u].first], inv[p.urpath_ends[u].second]);
  for (auto [v, u] : p.spokes) q.add_spoke(inv[v], u);
  for (auto [u1, u2] : p.rungs) q.add_rung(u1, u2);
  return q;
}

// Independent induced-path census for a plain graph: a vertex subset spans an
// induced path iff it is connected with max degree 2 and edge count |S|-1.
int count_induced_paths(const Pathograph& g) {
  int n = g.vertex_count();
  int total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexId> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    int edges = 0;
    int maxdeg = 0;
    for (VertexId v : verts) {
      int d = 0;
      for (VertexId w : verts)
        if (v != w && g.has_edge(v, w)) ++d;
      maxdeg = std::max(maxdeg, d);
      edges += d;
    }
    edges /= 2;
    if (edges != static_cast<int>(verts.size()) - 1 || maxdeg > 2) continue;
    // connectivity: paths are connected iff edge count and degree bound hold
    // together with a single component; check the component explicitly.
    std::set<VertexId> seen{verts[0]};
    std::vector<VertexId> stack{verts[0]};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : verts)
        if (!seen.count(w) && g.has_edge(v, w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (seen.size() == verts.size()) ++total;
  }
  return total;
}

std::vector<Pathograph> sample_pool() {
  std::vector<Pathograph> pool = truemper_family();
  pool.push_back(spoked_square());
  pool.push_back(hub_two_arcs());
  pool.push_back(complete_graph(3));
  pool.push_back(path_graph(4));
  std::mt19937 rng(20260816);
  for (int i = 0; i < 12; ++i) pool.push_back(random_rungless(rng, 4, 2));
  return pool;
}

}  // namespace

TEST_CASE("structural validation accepts well-formed inputs and names violations") {
  CHECK(validate(spoked_square()).empty());
  CHECK(validate(hub_two_arcs()).empty());
  for (const Pathograph& p : truemper_family()) CHECK(validate(p).empty());

  SECTION("urpath endpoints must be distinct and nonadjacent") {
    Pathograph p;
    VertexId a = p.add_vertex("a");
    VertexId b = p.add_vertex("b");
    p.add_edge(a, b);
    p.add_urpath("u1", a, b);
    auto errs = validate(p);
    REQUIRE_FALSE(errs.empty());
    CHECK(errs[0].find("adjacent") != std::string::npos);
  }

  SECTION("spokes may not sit on an endpoint of their own urpath") {
    Pathograph p = spoked_square();
    p.add_spoke(0, 0);  // vertex a is the left endpoint of u1
    auto errs = validate(p);
    REQUIRE_FALSE(errs.empty());
    CHECK(errs[0].find("its own urpath") != std::string::npos);
  }
}

TEST_CASE("subpathograph deletion removes incident structure") {
  Pathograph h = spoked_square();

  SECTION("deleting both spoke vertices leaves the bare urpath") {
    Pathograph q = subpathograph(h, {1, 3}, {});
    CHECK(q.vertex_count() == 2);
    CHECK(q.urpath_count() == 1);
    CHECK(q.edges.empty());
    CHECK(q.spokes.empty());
  }

  SECTION("deleting the urpath leaves the plain square") {
    Pathograph q = subpathograph(h, {}, {0});
    CHECK(q.is_graph());
    CHECK(is_isomorphic(q, cycle_graph(4)));
  }

  SECTION("parallel urpaths are deleted independently") {
    Pathograph q = subpathograph(make_theta(), {}, {0});
    CHECK(q.vertex_count() == 2);
    CHECK(q.urpath_count() == 2);
  }

  SECTION("deleting a vertex removes the urpaths it ends") {
    Pathograph q = subpathograph(h, {0}, {});
    CHECK(q.vertex_count() == 3);
    CHECK(q.urpath_count() == 0);
    CHECK(q.spokes.empty());
  }
}

TEST_CASE("connectivity counts urpaths, spokes and rungs as links") {
  CHECK(is_connected(spoked_square()));
  CHECK_FALSE(is_connected(Pathograph{}));

  Pathograph two;
  two.add_vertex("a");
  two.add_vertex("b");
  CHECK_FALSE(is_connected(two));

  two.add_urpath("u1", 0, 1);
  CHECK(is_connected(two));
}

TEST_CASE("path enumeration matches an independent census on plain graphs") {
  CHECK(enumerate_paths(complete_graph(3)).size() == 6);
  CHECK(enumerate_paths(cycle_graph(4)).size() == 12);
  CHECK(enumerate_paths(complete_graph(1)).size() == 1);

  for (const Pathograph& g :
       {path_graph(4), paw_graph(), cycle_graph(5), complete_bipartite(2, 3)}) {
    CHECK(static_cast<int>(enumerate_paths(g).size()) == count_induced_paths(g));
  }

  SECTION("a path may traverse an urpath") {
    auto paths = enumerate_paths(spoked_square());
    bool found = false;
    for (const PathSub& p : paths) {
      if (p.vert_set() == std::set<VertexId>{0, 2} && p.urpath_set() == std::set<UrpathId>{0})
        found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("inclusion search finds classic embeddings and rejects impossible ones") {
  SECTION("three parallel urpaths embed into the complete bipartite host") {
    auto inc = find_inclusion(make_theta(), complete_bipartite(2, 3));
    REQUIRE(inc.has_value());
    CHECK(check_inclusion(make_theta(), complete_bipartite(2, 3), *inc));
  }

  SECTION("hub attached to both sectors embeds into the four-rim wheel") {
    auto inc = find_inclusion(make_wheel_two_sectors(), wheel_graph(4));
    REQUIRE(inc.has_value());
    CHECK(check_inclusion(make_wheel_two_sectors(), wheel_graph(4), *inc));
  }

  SECTION("hub attached to one sector only cannot embed into the four-rim wheel") {
    CHECK_FALSE(find_inclusion(make_wheel_one_sector(), wheel_graph(4)).has_value());
  }

  SECTION("containment spot checks") {
    CHECK_FALSE(contains(cycle_graph(5), make_theta()));
    CHECK(contains(complete_bipartite(2, 3), make_theta()));
    CHECK(contains(path_graph(2), complete_graph(1)));
    CHECK_FALSE(contains(Pathograph{}, complete_graph(1)));
  }
}

TEST_CASE("isomorphism is invariant under relabeling and separates distinct shapes") {
  std::vector<Pathograph> pool = sample_pool();

  SECTION("every relabeled copy stays isomorphic with the same key") {
    std::mt19937 rng(7);
    for (const Pathograph& p : pool) {
      std::vector<int> perm(p.vertex_count());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      Pathograph q = permuted_copy(p, perm);
      CHECK(is_isomorphic(p, q));
      CHECK(canonical_key(p) == canonical_key(q));
    }
  }

  SECTION("prism variants with different urpath counts are distinct") {
    CHECK_FALSE(is_isomorphic(make_prism(1), make_prism(2)));
    CHECK(canonical_key(make_prism(1)) != canonical_key(make_prism(2)));
  }

  SECTION("key equality coincides with isomorphism across the pool") {
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i + 1; j < pool.size(); ++j) {
        bool iso = is_isomorphic(pool[i], pool[j]);
        bool same = canonical_key(pool[i]) == canonical_key(pool[j]);
        CHECK(iso == same);
      }
  }
}

TEST_CASE("plain-graph class counts match the published census") {
  CHECK(iso_representatives(1).size() == 1);
  CHECK(iso_representatives(2).size() == 2);
  CHECK(iso_representatives(3).size() == 4);
  CHECK(iso_representatives(4).size() == 11);
  CHECK(iso_representatives(5).size() == 34);

  SECTION("representatives have pairwise distinct keys") {
    std::set<std::string> keys;
    for (const Pathograph& g : iso_representatives(4)) keys.insert(canonical_key(g));
    CHECK(keys.size() == 11);
  }
}

TEST_CASE("inclusions compose and order the pool up to isomorphism") {
  SECTION("edge chain: complete graphs nest") {
    auto phi = find_inclusion(complete_graph(2), complete_graph(3));
    auto psi = find_inclusion(complete_graph(3), complete_graph(4));
    REQUIRE(phi.has_value());
    REQUIRE(psi.has_value());
    Inclusion xi = compose(complete_graph(2), complete_graph(3), complete_graph(4), *phi, *psi);
    CHECK(check_inclusion(complete_graph(2), complete_graph(4), xi));
  }

  SECTION("urpath chain: an urpath image expands through the middle host") {
    Pathograph u2;
    u2.add_vertex("a");
    u2.add_vertex("b");
    u2.add_urpath("u1", 0, 1);

    auto phi = find_inclusion(u2, path_graph(3));
    auto psi = find_inclusion(path_graph(3), cycle_graph(5));
    REQUIRE(phi.has_value());
    REQUIRE(psi.has_value());
    Inclusion xi = compose(u2, path_graph(3), cycle_graph(5), *phi, *psi);
    CHECK(check_inclusion(u2, cycle_graph(5), xi));
  }

  SECTION("reflexivity, transitivity, antisymmetry on a random pool") {
    std::vector<Pathograph> pool = sample_pool();
    for (const Pathograph& p : pool) {
      auto self = find_inclusion(p, p);
      REQUIRE(self.has_value());
      CHECK(check_inclusion(p, p, *self));
    }
    int composed = 0;
    for (const Pathograph& a : pool)
      for (const Pathograph& b : pool) {
        if (&a == &b) continue;
        auto phi = find_inclusion(a, b);
        if (!phi.has_value()) continue;
        auto back = find_inclusion(b, a);
        if (back.has_value()) CHECK(is_isomorphic(a, b));
        for (const Pathograph& c : pool) {
          if (&c == &a || &c == &b) continue;
          auto psi = find_inclusion(b, c);
          if (!psi.has_value()) continue;
          Inclusion xi = compose(a, b, c, *phi, *psi);
          CHECK(check_inclusion(a, c, xi));
          if (++composed > 40) return;  // plenty of coverage, keep it quick
        }
      }
  }
}
