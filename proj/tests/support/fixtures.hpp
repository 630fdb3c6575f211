#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pathograph/core.hpp"

// Shared builders for test graphs and pathographs, plus deterministic random
// generators (callers seed the engine).

namespace fixtures {

pg::Pathograph path_graph(int n);
pg::Pathograph cycle_graph(int n);
pg::Pathograph complete_graph(int n);
pg::Pathograph complete_bipartite(int a, int b);
pg::Pathograph paw_graph();    // triangle plus a pendant vertex
pg::Pathograph prism_graph();  // two triangles joined by a perfect matching
pg::Pathograph wheel_graph(int rim);  // hub adjacent to every cycle vertex

/** Square a-b-c-d plus an a-c urpath with spokes from b and d. */
pg::Pathograph spoked_square();

/** The three-vertex two-urpath pattern with a hub spoke on the second urpath. */
pg::Pathograph hub_two_arcs();

/** Plain labeled graph on n vertices decoded from an edge bitmask (pairs in
 * lexicographic order: (0,1), (0,2), ..., (0,n-1), (1,2), ...). */
pg::Pathograph graph_from_mask(int n, uint64_t mask);

/** One representative per isomorphism class of plain graphs on exactly n
 * vertices (n <= 7); deterministic order, cached. */
const std::vector<pg::Pathograph>& iso_representatives(int n);

/** Valid rungless pathograph: 2..max_verts vertices, up to max_urpaths
 * urpaths (at least one when the edge set permits), random spokes. */
pg::Pathograph random_rungless(std::mt19937& rng, int max_verts, int max_urpaths);

/** Valid pathograph with exactly two urpaths, one rung, and a few spokes. */
pg::Pathograph random_one_rung(std::mt19937& rng, int max_verts, int max_spokes);

}  // namespace fixtures
