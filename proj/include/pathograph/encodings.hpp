#pragma once

#include <vector>

#include "pathograph/core.hpp"

namespace pg {

/** Pattern relations between a plain target graph and a plain host graph. */
enum class Relation {
  kSubgraph,
  kInducedSubgraph,
  kMinor,
  kInducedMinor,
  kTopologicalMinor,
  kInducedTopologicalMinor,
};

/** Parse/print the relation names used on the command line. */
const char* relation_name(Relation rel);
Relation relation_from_name(const std::string& name);

/**
 * Every structure obtained from a member of `base` by adding any set of
 * permitted extra adjacencies (edges between vertices that are neither
 * adjacent nor the two ends of a common urpath, spokes from non-end vertices,
 * and rungs), deduplicated up to isomorphism.
 */
std::vector<Pathograph> adjacency_closure(const std::vector<Pathograph>& base);

/**
 * Every structure obtained from a member of `base` by replacing any subset of
 * its edges with urpaths, deduplicated up to isomorphism.
 */
std::vector<Pathograph> subdivision_closure(const std::vector<Pathograph>& base);

/**
 * Connector shapes: tree-shaped structures made of edges and urpaths with no
 * degree-two vertex and at most `leaves` leaf vertices, of total size
 * (vertices plus urpaths) at most `max_size`.  These are exactly the
 * compressed forms a connected branch piece can take.
 */
std::vector<Pathograph> connector_shapes(int leaves, int max_size);

/**
 * Structures whose appearances inside a plain host are exactly the induced
 * minor models of the plain graph `H`: each vertex of `H` inflates to a
 * connector shape and each edge of `H` to a nonempty set of edges between the
 * two shapes.  Members are capped at `max_size` total elements, which is
 * complete for hosts with at most `max_size` vertices.
 */
std::vector<Pathograph> inflation_closure(const Pathograph& H, int max_size);

/**
 * The family encoding `rel` for target `H`: a plain host graph stands in the
 * relation to `H` exactly when it contains some family member.
 */
std::vector<Pathograph> encoding_family(const Pathograph& H, Relation rel, int max_size);

/** Decide the relation through the encoding family (host must be plain). */
bool relation_holds(const Pathograph& H, const Pathograph& G, Relation rel, int max_size);

}  // namespace pg
