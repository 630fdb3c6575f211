#pragma once

#include <string>
#include <vector>

#include "pathograph/core.hpp"

namespace pg {

/**
 * The fixed structures whose appearances in a plain graph are exactly the
 * classic hole-based configurations: thetas, pyramids, prisms and wheels.
 *
 * A theta is two nonadjacent vertices joined by three internally disjoint
 * paths with no adjacency between path interiors.  A pyramid is a triangle
 * joined to an apex by three such paths, at most one of length one.  A prism
 * is two disjoint triangles joined by three such paths.  A wheel is a hole
 * together with a hub adjacent to at least three of its vertices.
 */
Pathograph make_theta();
Pathograph make_pyramid_one_short();  // one apex path of length exactly one
Pathograph make_pyramid_long();       // all apex paths of length at least two
Pathograph make_prism(int long_paths);  // 0..3 of the three joining paths long
Pathograph make_wheel_one_sector();   // hub adjacent to the inside of one sector
Pathograph make_wheel_two_sectors();  // hub adjacent to the inside of both sectors

std::vector<Pathograph> theta_family();
std::vector<Pathograph> pyramid_family();
std::vector<Pathograph> prism_family();
std::vector<Pathograph> wheel_family();

/** All nine structures: the union of the four families. */
std::vector<Pathograph> truemper_family();

/** Containment of each configuration kind in a plain graph, via the families. */
bool has_theta(const Pathograph& g);
bool has_pyramid(const Pathograph& g);
bool has_prism(const Pathograph& g);
bool has_wheel(const Pathograph& g);

}  // namespace pg
