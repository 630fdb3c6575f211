#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathograph/core.hpp"
#include "pathograph/formats.hpp"
#include "pathograph/reductions.hpp"

using namespace pg;

namespace {

WangTileSet uniform_set() {
  WangTileSet s;
  s.color_names = {"g"};
  s.tiles.push_back({"t", 0, 0, 0, 0});
  return s;
}

WangTileSet two_uniform_set() {
  WangTileSet s;
  s.color_names = {"g"};
  s.tiles.push_back({"t1", 0, 0, 0, 0});
  s.tiles.push_back({"t2", 0, 0, 0, 0});
  return s;
}

/// Two tiles whose east colors never meet any west color.
WangTileSet mismatch_set() {
  WangTileSet s;
  s.color_names = {"n", "c1", "c2", "c3", "c4"};
  s.tiles.push_back({"t1", 0, 1, 0, 2});
  s.tiles.push_back({"t2", 0, 3, 0, 4});
  return s;
}

TilePatch uniform_patch(int rows, int cols, int tile = 0) {
  TilePatch p;
  p.rows = rows;
  p.cols = cols;
  p.tile.assign(rows, std::vector<int>(cols, tile));
  return p;
}

PeriodicTiling unit_tiling(int tile = 0) {
  PeriodicTiling t;
  t.a = 1;
  t.b = 1;
  t.f = {{tile}};
  return t;
}

std::string colored_key(const ColoredGraph& g) {
  std::ostringstream out;
  for (int c : g.color) out << c << ",";
  out << ";";
  for (const auto& [a, b] : g.edges) out << a << "-" << b << ",";
  return out.str();
}

unsigned __int128 count_of(const std::vector<CountedType>& counts, const std::string& label) {
  for (const auto& c : counts)
    if (c.label == label) return c.count;
  FAIL("missing type label " + label);
  return 0;
}

}  // namespace

TEST_CASE("periodic tiling search finds the unit answer for a uniform tile") {
  auto t = search_periodic_tiling(uniform_set(), 4, 4);
  REQUIRE(t.has_value());
  CHECK(t->a == 1);
  CHECK(t->b == 1);
  CHECK(tiling_valid(uniform_set(), *t));
}

TEST_CASE("periodic tiling search respects pinned patches and padding") {
  TilePatch patch = uniform_patch(2, 2);
  auto t = search_periodic_tiling(uniform_set(), 4, 4, &patch);
  REQUIRE(t.has_value());
  CHECK(tiling_valid(uniform_set(), *t));

  // A tile whose fresh side colors match nothing must not disturb the answer.
  WangTileSet padded = uniform_set();
  for (const char* name : {"d1", "d2", "d3", "d4"}) padded.color_names.push_back(name);
  padded.tiles.push_back({"dummy", 1, 2, 3, 4});
  auto t2 = search_periodic_tiling(padded, 4, 4);
  REQUIRE(t2.has_value());
  CHECK(t2->a == 1);
  CHECK(t2->b == 1);
  CHECK(t2->f[0][0] == 0);
}

TEST_CASE("mismatched side colors admit no periodic tiling") {
  CHECK_FALSE(search_periodic_tiling(mismatch_set(), 4, 4).has_value());
}

TEST_CASE("tiling validity checks wrap-around matching") {
  PeriodicTiling t = unit_tiling();
  CHECK(tiling_valid(uniform_set(), t));
  CHECK_FALSE(tiling_valid(mismatch_set(), t));
}

TEST_CASE("tile files round-trip and report parse errors by line") {
  std::string text =
      "color: g\n"
      "tile: t g g g g\n"
      "patch: 2 2\n"
      "t t\n"
      "t t\n";
  TileFile f = parse_tiles(text);
  REQUIRE(f.tiles.tiles.size() == 1);
  CHECK(f.tiles.tiles[0].name == "t");
  CHECK(f.tiles.color_names == std::vector<std::string>{"g"});
  REQUIRE(f.patch.has_value());
  CHECK(f.patch->rows == 2);
  CHECK(f.patch->cols == 2);
  CHECK(f.patch->tile == std::vector<std::vector<int>>{{0, 0}, {0, 0}});

  TileFile again = parse_tiles(write_tiles(f));
  CHECK(again.tiles.tiles.size() == 1);
  CHECK(again.tiles.color_names == f.tiles.color_names);
  REQUIRE(again.patch.has_value());
  CHECK(again.patch->tile == f.patch->tile);

  try {
    parse_tiles("color: g\ntile: t g g g\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_tiles("color: g\ntile: t g g g h\n"), ParseError);
  CHECK_THROWS_AS(parse_tiles("color: g\npatch: 1 1\nnosuch\n"), ParseError);
}

TEST_CASE("the first translation stage has the fixed shape and family census") {
  Stage1 s = build_stage1(uniform_set(), uniform_patch(3, 3));
  CHECK(s.h.vertex_count() == 6);
  CHECK(s.h.urpath_count() == 2);
  CHECK(s.h.edges.size() == 13);
  CHECK(s.h.spokes.size() == 3);
  CHECK(s.h.rungs.size() == 1);

  CHECK(s.family.size() == 6);
  CHECK(count_of(s.type_counts, "1a") == 1);
  CHECK(count_of(s.type_counts, "1b") == 1);
  CHECK(count_of(s.type_counts, "1c") == 1);
  CHECK(count_of(s.type_counts, "1d") == 3);
  CHECK(count_of(s.type_counts, "2") == 0);
  CHECK(count_of(s.type_counts, "3") == 0);

  CHECK(stage1_color_name(s, 0) == "red");
  CHECK(stage1_color_name(s, 1) == "blue");
  CHECK(stage1_color_name(s, 2) == "t");
}

TEST_CASE("a unit tiling lifts to a verified first-stage witness") {
  Stage1 s = build_stage1(uniform_set(), uniform_patch(3, 3));
  DiRealization r = stage1_witness(s, unit_tiling());

  // Periods are lifted to four: one four-cycle per color.
  CHECK(r.g.vertex_count() == 8);
  int red = 0, blue = 0;
  for (int c : r.g.color) {
    if (c == 0) red++;
    if (c == 1) blue++;
  }
  CHECK(red == 4);
  CHECK(blue == 4);

  VerifyReport rep = verify_stage1_witness(s, r);
  INFO((rep.lines.empty() ? "" : rep.lines.back()));
  CHECK(rep.ok);
  CHECK(rep.skipped.empty());

  DiRealization bad = r;
  bad.g.color[0] = 1 - bad.g.color[0];
  CHECK_FALSE(verify_stage1_witness(s, bad).ok);

  PeriodicTiling out_of_range = unit_tiling(5);
  CHECK_THROWS(stage1_witness(s, out_of_range));
}

TEST_CASE("first-stage freeness search matches tilability") {
  Stage1 good = build_stage1(uniform_set(), uniform_patch(3, 3));
  CHECK(stage1_free_exists(good, 6));

  Stage1 bad = build_stage1(mismatch_set(), uniform_patch(3, 3));
  CHECK_FALSE(stage1_free_exists(bad, 6));
}

TEST_CASE("the second translation stage pads colors and counts its family") {
  Stage1 s1 = build_stage1(uniform_set(), uniform_patch(3, 3));
  Stage2 s2 = build_stage2(s1);
  REQUIRE(s2.K == 3);
  CHECK(s2.base.tiles.tiles.size() == 3);

  CHECK(s2.h.p.vertex_count() == 6 * s2.K);
  CHECK(s2.h.p.spokes.size() == static_cast<size_t>(6 * s2.K));
  REQUIRE(s2.h.color.size() == static_cast<size_t>(s2.h.p.vertex_count()));
  for (int c : s2.h.color) {
    CHECK(c != 0);
    CHECK(c >= -s2.K);
    CHECK(c <= s2.K);
  }

  CHECK(count_of(s2.type_counts, "1") == (static_cast<unsigned __int128>(1) << 9) - 3);
  CHECK(count_of(s2.type_counts, "2") == 8);
  CHECK(count_of(s2.type_counts, "3") == 8);
  CHECK(count_of(s2.type_counts, "4") == 3);
  CHECK(count_of(s2.type_counts, "5") == 3);
  CHECK(count_of(s2.type_counts, "6") == 3);
  CHECK(count_of(s2.type_counts, "7") == 3);
  CHECK(count_of(s2.type_counts, "8") == 6);

  auto type4 = stage2_family_type(s2, "4", 100);
  CHECK(type4.size() == 3);

  auto type1 = stage2_family_type(s2, "1", 600);
  CHECK(type1.size() == 509);
  std::set<std::string> distinct;
  for (const auto& g : type1) distinct.insert(colored_key(g));
  CHECK(distinct.size() == 509);

  CHECK_THROWS_AS(stage2_family_type(s2, "1", 100), std::length_error);
}

TEST_CASE("second-stage counts follow the padded-set formulas for two tiles") {
  Stage1 s1 = build_stage1(two_uniform_set(), uniform_patch(3, 3));
  Stage2 s2 = build_stage2(s1);
  int K = s2.K;
  REQUIRE(K == 3);
  const auto& tiles = s2.base.tiles.tiles;
  REQUIRE(static_cast<int>(tiles.size()) == K);

  int h_matched = 0, v_matched = 0;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      if (tiles[i].east == tiles[j].west) h_matched++;
      if (tiles[i].north == tiles[j].south) v_matched++;
    }
  CHECK(count_of(s2.type_counts, "1") ==
        (static_cast<unsigned __int128>(1) << (K * K)) - static_cast<unsigned>(K));
  CHECK(count_of(s2.type_counts, "2") == static_cast<unsigned>(K * K - h_matched));
  CHECK(count_of(s2.type_counts, "3") == static_cast<unsigned>(K * K - v_matched));
  CHECK(count_of(s2.type_counts, "4") == static_cast<unsigned>(K * (K - 1) / 2));
  CHECK(count_of(s2.type_counts, "5") == static_cast<unsigned>(K * (K - 1) / 2));
  CHECK(count_of(s2.type_counts, "6") == static_cast<unsigned>(K));
  CHECK(count_of(s2.type_counts, "7") == static_cast<unsigned>(K));
  CHECK(count_of(s2.type_counts, "8") == static_cast<unsigned>(K * (K - 1)));
}

TEST_CASE("a unit tiling lifts to a verified second-stage witness") {
  Stage2 s2 = build_stage2(build_stage1(uniform_set(), uniform_patch(3, 3)));
  ColoredGraph g = stage2_witness(s2, unit_tiling());
  CHECK(g.vertex_count() == 8 * s2.K);

  VerifyReport rep = verify_stage2_witness(s2, g);
  INFO((rep.lines.empty() ? "" : rep.lines.back()));
  CHECK(rep.ok);

  ColoredGraph bad = g;
  bad.color[0] = -bad.color[0];
  CHECK_FALSE(verify_stage2_witness(s2, bad).ok);
}

TEST_CASE("the third translation stage erases colors with the clique gadget") {
  Stage3 s3 = build_stage3(build_stage2(build_stage1(uniform_set(), uniform_patch(3, 3))));
  int K = s3.base.K;
  REQUIRE(K == 9);

  CHECK(s3.h.vertex_count() == 11 * K);
  CHECK(s3.h.spokes.size() == static_cast<size_t>(10 * K));

  CHECK(count_of(s3.type_counts, "9") == static_cast<unsigned>(2 * K * (2 * K - 1) / 2));
  CHECK(count_of(s3.type_counts, "10") == static_cast<unsigned>(2 * K));
  CHECK(count_to_string(count_of(s3.type_counts, "1")) == "2417851639229258349412343");

  auto ten = stage3_family_type(s3, "10", 50);
  CHECK(ten.size() == static_cast<size_t>(2 * K));
  for (const auto& p : ten) CHECK(validate(p).empty());
  CHECK_THROWS_AS(stage3_family_type(s3, "1", 1000), std::length_error);

  Pathograph w = stage3_witness(s3, unit_tiling());
  CHECK(w.vertex_count() == 13 * K);

  VerifyReport rep = verify_stage3_witness(s3, w);
  INFO((rep.lines.empty() ? "" : rep.lines.back()));
  CHECK(rep.ok);
  REQUIRE_FALSE(rep.skipped.empty());
  bool mentions_freeness = false;
  for (const auto& line : rep.skipped)
    mentions_freeness = mentions_freeness || line.find("freeness") != std::string::npos;
  CHECK(mentions_freeness);

  Pathograph bad = w;
  REQUIRE_FALSE(bad.edges.empty());
  bad.edges.erase(bad.edges.begin());
  CHECK_FALSE(verify_stage3_witness(s3, bad).ok);
}

TEST_CASE("count guards reject overflow and print wide values") {
  Stage1 s1 = build_stage1(uniform_set(), uniform_patch(3, 3));
  CHECK_THROWS_AS(build_stage2(s1, 12), std::overflow_error);
  CHECK(count_to_string(static_cast<unsigned __int128>(1) << 100) ==
        "1267650600228229401496703205376");
  CHECK(count_to_string(0) == "0");
}

TEST_CASE("the umbrella conversion reaches every stage from one tiling") {
  Stage3 s3 = build_stage3(build_stage2(build_stage1(uniform_set(), uniform_patch(3, 3))));
  for (int stage = 1; stage <= 3; ++stage) {
    ReductionWitness w = tiling_to_realization(s3, stage, unit_tiling());
    CHECK(w.stage == stage);
    INFO("stage " << stage);
    CHECK(w.report.ok);
    if (stage == 3) CHECK_FALSE(w.report.skipped.empty());
  }
}

TEST_CASE("annotated stage exports still parse as plain structure files") {
  Stage1 s1 = build_stage1(uniform_set(), uniform_patch(3, 3));
  std::string one = write_stage1_pgf(s1);
  CHECK(one.find("# color:") != std::string::npos);
  Pathograph p1 = parse_pgf(one);
  CHECK(p1.vertex_count() == 6);
  CHECK(p1.urpath_count() == 2);

  Stage2 s2 = build_stage2(s1);
  std::string two = write_stage2_pgf(s2);
  CHECK(two.find("# color:") != std::string::npos);
  Pathograph p2 = parse_pgf(two);
  CHECK(p2.vertex_count() == 6 * s2.K);
}
