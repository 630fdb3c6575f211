#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathograph/closedcase.hpp"
#include "pathograph/core.hpp"
#include "pathograph/encodings.hpp"
#include "pathograph/formats.hpp"
#include "pathograph/realization.hpp"
#include "support/fixtures.hpp"

using namespace pg;
using namespace fixtures;

namespace {

/// Two disjoint urpaths joined by one rung.
Pathograph bare_rung() {
  Pathograph p;
  for (const char* name : {"a1", "b1", "a2", "b2"}) p.add_vertex(name);
  p.add_urpath("u1", 0, 1);
  p.add_urpath("u2", 2, 3);
  p.add_rung(0, 1);
  return p;
}

/// The same with a spoke hanging off the first urpath.
Pathograph rung_and_spoke() {
  Pathograph p = bare_rung();
  VertexId s = p.add_vertex("s");
  p.add_spoke(s, 0);
  return p;
}

void check_split_geometry(const Pathograph& h, const RungSplit& split) {
  const Pathograph& m = split.member;
  REQUIRE(validate(m).empty());
  CHECK(m.rungs.size() < h.rungs.size());
  REQUIRE(split.cx >= 0);
  REQUIRE(split.cy >= 0);
  CHECK(m.has_edge(split.cx, split.cy));

  auto check_side = [&](UrpathId side, VertexId end, VertexId pinned) {
    if (side < 0) {
      CHECK(m.has_edge(end, pinned));
    } else {
      auto [p, q] = m.urpath_ends[side];
      CHECK(((p == end && q == pinned) || (p == pinned && q == end)));
    }
  };
  auto [lx, rx] = h.urpath_ends[split.ux];
  auto [ly, ry] = h.urpath_ends[split.uy];
  check_side(split.ax_side, lx, split.cx);
  check_side(split.bx_side, rx, split.cx);
  check_side(split.ay_side, ly, split.cy);
  check_side(split.by_side, ry, split.cy);

  REQUIRE(split.urpath_map.size() == static_cast<size_t>(h.urpath_count()));
  CHECK(split.urpath_map[split.ux] == -1);
  CHECK(split.urpath_map[split.uy] == -1);
}

}  // namespace

TEST_CASE("closedness reports the known families") {
  CHECK(is_closed({complete_graph(3)}).closed);
  CHECK(is_closed({path_graph(3), complete_graph(3)}).closed);
  CHECK(is_closed({path_graph(1)}).closed);
  CHECK(is_closed({}).closed);

  Pathograph u2;
  u2.add_vertex("v1");
  u2.add_vertex("v2");
  u2.add_urpath("u1", 0, 1);
  CHECK(is_closed({u2}).closed);

  CHECK(is_closed(adjacency_closure({paw_graph()})).closed);

  ClosednessReport open = is_closed({path_graph(3)});
  REQUIRE_FALSE(open.closed);
  CHECK(open.member == 0);
  CHECK(open.addition.find("edge") != std::string::npos);
}

TEST_CASE("splitting the rung of two joined urpaths yields every side choice") {
  Pathograph h = bare_rung();
  auto splits = eliminate_rung(h, {0, 1});
  CHECK(splits.size() == 16);

  std::set<std::string> labeled;
  int all_edges = 0;
  int all_urpaths = 0;
  for (const auto& s : splits) {
    check_split_geometry(h, s);
    CHECK(s.member.rungs.empty());
    labeled.insert(write_pgf(s.member));
    int sides = (s.ax_side >= 0) + (s.bx_side >= 0) + (s.ay_side >= 0) + (s.by_side >= 0);
    if (sides == 0) {
      all_edges++;
      CHECK(s.member.urpath_count() == 0);
    }
    if (sides == 4) {
      all_urpaths++;
      CHECK(s.member.urpath_count() == 4);
    }
  }
  CHECK(labeled.size() == 16);
  CHECK(all_edges == 1);
  CHECK(all_urpaths == 1);
}

TEST_CASE("splitting with a spoke on a split urpath redistributes it") {
  Pathograph h = rung_and_spoke();
  auto splits = eliminate_rung(h, {0, 1});
  CHECK(splits.size() == 32);
  for (const auto& s : splits) {
    check_split_geometry(h, s);
    CHECK(s.member.rungs.empty());
  }
}

TEST_CASE("splitting demands the rung exist") {
  CHECK_THROWS_AS(eliminate_rung(spoked_square(), {0, 1}), std::invalid_argument);
}

TEST_CASE("realizations of split members lift to realizations of the source") {
  Pathograph h = bare_rung();
  int lifted = 0;
  for (const auto& s : eliminate_rung(h, {0, 1})) {
    for (const auto& r : enumerate_realizations(s.member, 2)) {
      Realization up = lift_realization(h, s, r);
      std::string why;
      INFO(why);
      REQUIRE(is_realization(h, up, &why));
      lifted++;
    }
  }
  CHECK(lifted > 0);
}

TEST_CASE("the closed-family decision agrees with bounded search when it halts") {
  Pathograph fig = spoked_square();
  std::vector<Pathograph> tri = {complete_graph(3)};

  CHECK(decide_closed(fig, tri));
  CHECK(decide_bounded(fig, tri, 4).found);

  CHECK(decide_closed(fig, {}));
  CHECK_FALSE(decide_closed(fig, {path_graph(1)}));
  CHECK_FALSE(closed_witness(fig, {path_graph(1)}).has_value());
}

TEST_CASE("the decision descends through rung splitting") {
  Pathograph h = bare_rung();
  CHECK(decide_closed(h, {complete_graph(3)}));

  Pathograph u2;
  u2.add_vertex("v1");
  u2.add_vertex("v2");
  u2.add_urpath("u1", 0, 1);
  CHECK_FALSE(decide_closed(h, {u2}));
  CHECK(decide_closed(path_graph(2), {u2}));
}

TEST_CASE("the decision rejects families that are not closed") {
  CHECK_THROWS_AS(decide_closed(spoked_square(), {path_graph(3)}), std::invalid_argument);
}

TEST_CASE("witnesses from the closed-family decision check out") {
  Pathograph fig = spoked_square();
  std::vector<Pathograph> tri = {complete_graph(3)};

  auto w1 = closed_witness(fig, tri);
  REQUIRE(w1.has_value());
  CHECK(is_realization(fig, *w1));
  CHECK(is_f_free(w1->graph, tri));

  auto w2 = closed_witness(fig, tri);
  REQUIRE(w2.has_value());
  CHECK(determination_string(fig, *w1) == determination_string(fig, *w2));

  Pathograph h = bare_rung();
  auto w3 = closed_witness(h, tri);
  REQUIRE(w3.has_value());
  CHECK(is_realization(h, *w3));
  CHECK(is_f_free(w3->graph, tri));
}
