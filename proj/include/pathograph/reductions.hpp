#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pathograph/core.hpp"

namespace pg {

// --- Wang tiles -------------------------------------------------------------------

struct WangTile {
  std::string name;
  int north = 0, east = 0, south = 0, west = 0;  // side color ids
};

struct WangTileSet {
  std::vector<WangTile> tiles;
  std::vector<std::string> color_names;  // index = side color id

  int find_tile(const std::string& name) const;  // -1 when absent
};

/** A fixed rectangular pin: cell (i, j), 1-based, holds tile[j-1][i-1]. */
struct TilePatch {
  int cols = 0, rows = 0;
  std::vector<std::vector<int>> tile;  // tile[row][col], 0-based, row = j - 1
};

/** Toroidal assignment: cell (i, j) holds f[i mod a][j mod b], 0-based. */
struct PeriodicTiling {
  int a = 1, b = 1;
  std::vector<std::vector<int>> f;
};

/** East colors match the right neighbor's west, north the upper neighbor's south. */
bool tiling_valid(const WangTileSet& s, const PeriodicTiling& t);

/**
 * Exhaustive backtracking over periods (a, b) <= bounds in lexicographic
 * order, then over cell assignments; matching wraps cyclically.  A patch pins
 * f((i-1) mod a, (j-1) mod b) for each of its 1-based cells (i, j); period
 * pairs whose wrapping makes the pins conflict are skipped.
 */
std::optional<PeriodicTiling> search_periodic_tiling(const WangTileSet& s, int a_max, int b_max,
                                                     const TilePatch* patch = nullptr);

// Tile files: `color: <names...>`, `tile: <name> <N> <E> <S> <W>`, and an
// optional `patch: <rows> <cols>` followed by that many rows of tile names
// (first row = j 1).
struct TileFile {
  WangTileSet tiles;
  std::optional<TilePatch> patch;
};
TileFile parse_tiles(const std::string& text);
std::string write_tiles(const TileFile& f);

// --- directed multicolored pathographs (first translation stage) -------------------
//
// Vertex/edge/urpath colors are small ints; in generated instances color 0 is
// the first cycle's color ("red"), 1 the second's ("blue"), and 2 + k is tile
// k of the instance's tile set.  Directed 2-cycles are never allowed.

struct DiEdge {
  VertexId from = 0, to = 0;
  int color = 0;
};

struct DiSpoke {
  VertexId vertex = 0;
  UrpathId urpath = 0;
  bool from_vertex = true;  // witness edges run vertex -> internal (else reverse)
};

struct DiRung {
  UrpathId from = 0, to = 0;
};

struct DiPathograph {
  std::vector<std::string> vertex_names;
  std::vector<int> vertex_color;
  std::vector<DiEdge> edges;
  std::vector<std::string> urpath_names;
  std::vector<std::pair<VertexId, VertexId>> urpath_ends;  // (tail, head)
  std::vector<int> urpath_color;
  std::vector<DiSpoke> spokes;
  std::vector<DiRung> rungs;

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int urpath_count() const { return static_cast<int>(urpath_names.size()); }
};

struct DiGraph {
  std::vector<std::string> names;
  std::vector<int> color;
  std::map<std::pair<VertexId, VertexId>, int> arcs;  // (from, to) -> color

  int vertex_count() const { return static_cast<int>(names.size()); }
  std::optional<int> arc_color(VertexId from, VertexId to) const;
};

struct DiRealization {
  DiGraph g;
  std::vector<std::vector<VertexId>> paths;  // per urpath: tail, internals..., head
};

/**
 * Permissive realization check: the source's vertices, colors, and directed
 * colored edges are present verbatim; each urpath is replaced by a directed
 * path of at least three vertices in the urpath's color, internally disjoint
 * from the others and jointly covering all unnamed vertices; each spoke and
 * rung has at least one witness edge in its direction; no directed 2-cycles.
 * Extra edges are allowed anywhere else (the forbidden family, not the
 * replacement discipline, is what constrains them).
 */
bool check_directed_realization(const DiPathograph& h, const DiRealization& r,
                                std::vector<std::string>* why = nullptr);

/** Induced containment: injective map matching colors and arcs exactly. */
bool digraph_contains(const DiGraph& g, const DiGraph& pattern);

// --- translation stages -------------------------------------------------------------

struct CountedType {
  std::string label;
  unsigned __int128 count = 0;
};
std::string count_to_string(unsigned __int128 v);

/**
 * First stage: two directed colored 3-cycles (one vertex of each replaced on
 * the far side by an urpath), a complete grid of tile-colored edges given by
 * the patch, spokes from the first cycle's vertices to the second's urpath,
 * and one rung; the forbidden family pins the grid shape (types 1a-1d) and
 * the tile matching rules (types 2 and 3).
 */
struct Stage1 {
  WangTileSet tiles;  // as given; this stage never pads
  TilePatch patch;    // 3 x 3
  DiPathograph h;
  std::vector<DiGraph> family;
  std::vector<CountedType> type_counts;  // labels 1a, 1b, 1c, 1d, 2, 3
};

Stage1 build_stage1(const WangTileSet& tiles, const TilePatch& patch);

std::string stage1_color_name(const Stage1& s, int color);

/** Canonical witness from a tiling; periods are lifted to multiples >= 4. */
DiRealization stage1_witness(const Stage1& s, const PeriodicTiling& t);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;    // one line per executed check
  std::vector<std::string> skipped;  // checks declared out of reach
};

/** Full verification: realization discipline plus family-freeness. */
VerifyReport verify_stage1_witness(const Stage1& s, const DiRealization& r);

/**
 * Is there any family-free realization with both cycle lengths <= max_cycle?
 * Exhaustive over the shapes a free realization can take: freeness forces a
 * complete grid of tile-colored forward edges, and edges beyond the canonical
 * shape can only add forbidden patterns, so the search backtracks over grid
 * colorings pruned by family containment on each completed local triple.
 */
bool stage1_free_exists(const Stage1& s, int max_cycle);

// --- second stage: vertex-colored --------------------------------------------------

struct ColoredGraph {
  std::vector<std::string> names;
  std::vector<int> color;  // nonzero, in [-K, K]
  std::set<std::pair<VertexId, VertexId>> edges;

  int vertex_count() const { return static_cast<int>(names.size()); }
};

struct ColoredPathograph {
  Pathograph p;
  std::vector<int> color;  // per named vertex
};

/**
 * Second stage: every first-stage vertex becomes a color-coded path of K
 * vertices (positive colors on the first cycle's side, negative on the
 * second's), cycle edges/urpaths link last to first, each tile-colored edge
 * becomes a complete bipartite gadget minus the slot matching the tile's
 * index, and spokes attach every path vertex of one side to the far side's
 * urpath.  Types 1-3 translate the grid rules; types 4-8 pin the color
 * discipline.  The tile set is padded to at least min_colors with dummy tiles
 * whose sides match nothing.
 */
struct Stage2 {
  Stage1 base;  // rebuilt over the padded tile set
  int K = 3;
  ColoredPathograph h;
  std::vector<CountedType> type_counts;  // labels 1..8
};

Stage2 build_stage2(const Stage1& s, int min_colors = 3);

/** Members of one type; throws std::length_error when the census exceeds limit. */
std::vector<ColoredGraph> stage2_family_type(const Stage2& s, const std::string& type,
                                             size_t limit);

ColoredGraph stage2_witness(const Stage2& s, const PeriodicTiling& t);
VerifyReport verify_stage2_witness(const Stage2& s, const ColoredGraph& g);

// --- third stage: uncolored ---------------------------------------------------------

/**
 * Color-erasing transform shared by the source, the family members, and the
 * witnesses: add a clique of 3K anchors, 2K selector vertices with nested
 * anchor neighborhoods, and one edge from each colored vertex to the selector
 * indexed by its color (positive i -> selector i, negative -i -> K + i).
 */
Pathograph uncolor_transform(const ColoredGraph& g, int K);

struct Stage3 {
  Stage2 base;  // padded so that K >= 9
  Pathograph h;
  std::vector<CountedType> type_counts;  // labels 1..8 inherited, plus 9 and 10
};

Stage3 build_stage3(const Stage2& s);

std::vector<Pathograph> stage3_family_type(const Stage3& s, const std::string& type, size_t limit);

Pathograph stage3_witness(const Stage3& s, const PeriodicTiling& t);
VerifyReport verify_stage3_witness(const Stage3& s, const Pathograph& g);

// --- umbrella -----------------------------------------------------------------------

struct ReductionWitness {
  int stage = 1;
  DiRealization directed;  // stage 1
  ColoredGraph colored;    // stage 2
  Pathograph plain;        // stage 3
  VerifyReport report;
};

ReductionWitness tiling_to_realization(const Stage3& s, int stage, const PeriodicTiling& t);

// --- annotated stage output ----------------------------------------------------------
//
// Standard PGF body followed by `# color:` / `# dir:` comment lines, so the
// files still parse as plain pathographs.

std::string write_stage1_pgf(const Stage1& s);
std::string write_stage2_pgf(const Stage2& s);

}  // namespace pg
