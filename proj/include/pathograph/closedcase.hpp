#pragma once

#include <optional>
#include <vector>

#include "pathograph/core.hpp"
#include "pathograph/realization.hpp"

namespace pg {

/**
 * One way of refining the first rung of a source pathograph into an explicit
 * edge.  The rung's witness edge is pinned between two freshly named internal
 * vertices, one on each participating urpath; each urpath splits around its
 * pinned vertex into two sides that are either a single edge or a shorter
 * urpath, and every spoke or rung incident to the split urpaths is
 * redistributed onto exactly one of the pieces.
 */
struct RungSplit {
  Pathograph member;

  UrpathId ux = -1, uy = -1;  // the split urpaths of the source
  VertexId cx = -1, cy = -1;  // their pinned vertices, named in the member

  // Member urpath carrying each side of a split urpath, or -1 when that side
  // collapsed to a single edge.  `a` is the side toward the left endpoint.
  UrpathId ax_side = -1, bx_side = -1;
  UrpathId ay_side = -1, by_side = -1;

  std::vector<UrpathId> urpath_map;  // source urpath -> member urpath; -1 for ux, uy
};

/**
 * All splits of the given rung, deduplicated by labeled structure.  Every
 * member has strictly fewer rungs than the source, so repeated splitting
 * terminates.  Throws when the rung is not present.
 */
std::vector<RungSplit> eliminate_rung(const Pathograph& h, std::pair<UrpathId, UrpathId> rung);

/**
 * Rebuild a realization of the source from a realization of a split member:
 * the pinned vertex and both side paths fold back into one replacement path.
 */
Realization lift_realization(const Pathograph& h, const RungSplit& split, const Realization& r);

struct ClosednessReport {
  bool closed = true;
  // When not closed: which member and which single addition escape the family.
  int member = -1;       // index into the family, -1 when closed
  std::string addition;  // e.g. "edge a b", "spoke v u", "rung u1 u2"
};

/**
 * A family is closed when every legal single addition (an edge between
 * nonadjacent vertices that are not the two endpoints of a common urpath, a
 * spoke from a non-endpoint vertex, or a rung) to any member yields a
 * pathograph that still contains some member of the family.  Single additions
 * suffice: iterated additions stay inside the family by induction.
 */
ClosednessReport is_closed(const std::vector<Pathograph>& family);

/**
 * Whether h admits a family-free realization.  Requires a closed family
 * (checked; throws std::invalid_argument naming the counterexample otherwise).
 * Rung-free sources are decided exactly by automaton emptiness; otherwise the
 * first rung is split and the members are decided recursively (memoized up to
 * isomorphism).
 */
bool decide_closed(const Pathograph& h, const std::vector<Pathograph>& family);

/** A family-free realization found through the same descent, if one exists. */
std::optional<Realization> closed_witness(const Pathograph& h,
                                          const std::vector<Pathograph>& family);

}  // namespace pg
