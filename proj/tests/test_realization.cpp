#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathograph/core.hpp"
#include "pathograph/realization.hpp"
#include "pathograph/truemper.hpp"
#include "support/fixtures.hpp"

using namespace pg;
using namespace fixtures;

namespace {

std::vector<Pathograph> theta_prism_wheel() {
  std::vector<Pathograph> fam = theta_family();
  for (const Pathograph& p : prism_family()) fam.push_back(p);
  for (const Pathograph& p : wheel_family()) fam.push_back(p);
  return fam;
}

std::vector<Pathograph> theta_wheel() {
  std::vector<Pathograph> fam = theta_family();
  for (const Pathograph& p : wheel_family()) fam.push_back(p);
  return fam;
}

}  // namespace

TEST_CASE("realization enumeration hits the exact counts of small cases") {
  Pathograph h = spoked_square();

  auto one = enumerate_realizations(h, 1);
  REQUIRE(one.size() == 1);
  CHECK(is_isomorphic(one[0].graph, wheel_graph(4)));

  CHECK(enumerate_realizations(h, 2).size() == 10);

  auto theta1 = enumerate_realizations(make_theta(), 1);
  REQUIRE(theta1.size() == 1);
  CHECK(is_isomorphic(theta1[0].graph, complete_bipartite(2, 3)));
}

TEST_CASE("the semantic check accepts enumerated realizations and names violations") {
  Pathograph h = spoked_square();
  for (const Realization& r : enumerate_realizations(h, 2)) {
    std::string why;
    CHECK(is_realization(h, r, &why));
  }

  SECTION("removing a spoke's only witness edge is caught") {
    Realization r = enumerate_realizations(h, 1)[0];
    VertexId internal = r.internals[0][0];
    r.graph.edges.erase({std::min(VertexId(1), internal), std::max(VertexId(1), internal)});
    std::string why;
    CHECK_FALSE(is_realization(h, r, &why));
    CHECK(why.find("spoke") != std::string::npos);
  }

  SECTION("an edge between internals of one path is caught") {
    // lengthen to three internals and wire a chord inside the path
    auto rs = enumerate_realizations(h, 3);
    Realization chord;
    bool found = false;
    for (const Realization& r : rs)
      if (r.internals[0].size() == 3) {
        chord = r;
        found = true;
        break;
      }
    REQUIRE(found);
    VertexId x1 = chord.internals[0][0];
    VertexId x3 = chord.internals[0][2];
    chord.graph.add_edge(x1, x3);
    CHECK_FALSE(is_realization(h, chord));
  }
}

TEST_CASE("determination strings encode and rebuild realizations") {
  Pathograph h = spoked_square();

  SECTION("the one-internal wheel names every source vertex") {
    Realization r = enumerate_realizations(h, 1)[0];
    CHECK(write_det_string(h, determination_string(h, r)) == "1:{a,b,c,d}");
  }

  SECTION("the two-path split rebuilds from its text form") {
    auto r = realization_from_string(h, parse_det_string(h, "1:{a,b} 1:{c,d}"));
    REQUIRE(r.has_value());
    CHECK(is_realization(h, *r));
    CHECK(write_det_string(h, determination_string(h, *r)) == "1:{a,b} 1:{c,d}");
  }

  SECTION("round trip over every realization at bound three") {
    for (const Realization& r : enumerate_realizations(h, 3)) {
      auto back = realization_from_string(h, determination_string(h, r));
      REQUIRE(back.has_value());
      CHECK(canonical_key(back->graph) == canonical_key(r.graph));
      CHECK(determination_string(h, *back) == determination_string(h, r));
    }
  }

  SECTION("round trip on random rungless sources") {
    std::mt19937 rng(42);
    for (int i = 0; i < 8; ++i) {
      Pathograph g = random_rungless(rng, 4, 2);
      for (const Realization& r : enumerate_realizations(g, 2)) {
        auto back = realization_from_string(g, determination_string(g, r));
        REQUIRE(back.has_value());
        CHECK(determination_string(g, *back) == determination_string(g, r));
      }
    }
  }

  SECTION("ill-formed strings are rejected with a reason") {
    std::string why;
    CHECK_FALSE(realization_from_string(h, parse_det_string(h, "1:{b}"), &why).has_value());
    CHECK_FALSE(why.empty());

    Pathograph f = hub_two_arcs();
    CHECK_FALSE(
        realization_from_string(f, parse_det_string(f, "2:{X,Y} 1:{X,Y}")).has_value());
    CHECK_FALSE(realization_from_string(f, parse_det_string(f, "1:{X,Y}")).has_value());
  }
}

TEST_CASE("family-freeness and minimality behave on the square's realizations") {
  Pathograph h = spoked_square();
  Realization wheel = enumerate_realizations(h, 1)[0];

  CHECK_FALSE(is_f_free(wheel.graph, wheel_family()));
  CHECK(is_f_free(cycle_graph(5), truemper_family()));
  CHECK(is_f_free(wheel.graph, {}));

  SECTION("unique witness edges make the wheel minimal") {
    CHECK(is_minimal(h, wheel));
  }

  SECTION("a doubly-realized spoke is not minimal") {
    auto r = realization_from_string(h, parse_det_string(h, "1:{a,b,d} 1:{b,c}"));
    REQUIRE(r.has_value());
    CHECK(is_realization(h, *r));
    CHECK_FALSE(is_minimal(h, *r));
  }

  SECTION("spoke-free sources are always minimal") {
    for (const Realization& r : enumerate_realizations(make_theta(), 2))
      CHECK(is_minimal(make_theta(), r));
  }
}

TEST_CASE("bounded search finds the first free realization or reports unknown") {
  Pathograph h = spoked_square();

  SECTION("excluding thetas and wheels leaves the two-path split") {
    BoundedDecision d = decide_bounded(h, theta_wheel(), 2);
    REQUIRE(d.found);
    CHECK(write_det_string(h, determination_string(h, *d.witness)) == "1:{a,b} 1:{c,d}");
  }

  SECTION("adding prisms closes every realization at small bounds") {
    BoundedDecision d = decide_bounded(h, theta_prism_wheel(), 3);
    CHECK_FALSE(d.found);
    for (const Realization& r : enumerate_realizations(h, 3))
      CHECK_FALSE(is_f_free(r.graph, theta_prism_wheel()));
  }

  SECTION("a plain source realizes itself") {
    BoundedDecision d = decide_bounded(path_graph(2), {complete_graph(3)}, 1);
    REQUIRE(d.found);
    CHECK(canonical_key(d.witness->graph) == canonical_key(path_graph(2)));
  }
}

TEST_CASE("spoke and rung witness edges obey the at-least-one rule") {
  std::mt19937 rng(99);
  for (int i = 0; i < 6; ++i) {
    Pathograph h = random_one_rung(rng, 3, 1);
    for (const Realization& r : enumerate_realizations(h, 2)) {
      std::string why;
      bool ok = is_realization(h, r, &why);
      INFO(why);
      CHECK(ok);
    }
  }
}
