#pragma once

#include <functional>
#include <optional>

#include "pathograph/core.hpp"
#include "pathograph/formats.hpp"

namespace pg {

/**
 * A concrete graph obtained from a pathograph by replacing each urpath with an
 * induced path of chosen positive internal length.  Source vertices keep their
 * ids; internal vertices are appended and named `<urpath>#<position>`.
 */
struct Realization {
  Pathograph graph;                              // a plain graph
  std::vector<std::vector<VertexId>> internals;  // per urpath, in path order
};

/**
 * Deterministic exhaustive enumeration of the realizations of h with internal
 * lengths in 1..max_internal: length tuples ascend lexicographically, then
 * per-spoke nonempty neighbor subsets ascend in binary counter order, then
 * per-rung nonempty cross-edge subsets ascend likewise (rightmost fastest).
 * The visitor returns false to stop early.
 */
void for_each_realization(const Pathograph& h, int max_internal,
                          const std::function<bool(const Realization&)>& visit);

std::vector<Realization> enumerate_realizations(const Pathograph& h, int max_internal);

/** Exact semantic check; on failure *why (if given) names the first violation. */
bool is_realization(const Pathograph& h, const Realization& r, std::string* why = nullptr);

/**
 * Per urpath in declaration order, left endpoint to right, one symbol per
 * internal vertex recording its neighborhood among the source vertices.
 */
DetString determination_string(const Pathograph& h, const Realization& r);

std::optional<Realization> realization_from_string(const Pathograph& h, const DetString& s,
                                                   std::string* why = nullptr);

/** No member of the family has an inclusion into g. */
bool is_f_free(const Pathograph& g, const std::vector<Pathograph>& family);

/** Every spoke and every rung is realized by exactly one edge. */
bool is_minimal(const Pathograph& h, const Realization& r);

struct BoundedDecision {
  bool found = false;
  std::optional<Realization> witness;
};

/** First family-free realization in enumeration order, if any within bound. */
BoundedDecision decide_bounded(const Pathograph& h, const std::vector<Pathograph>& family,
                               int max_internal);

// --- file conversion ------------------------------------------------------------

PgrFile realization_to_pgr(const Pathograph& h, const Realization& r);

/** Rebuild a Realization from a parsed file; nullopt (with *why) on mismatch. */
std::optional<Realization> realization_from_pgr(const Pathograph& h, const PgrFile& file,
                                                std::string* why = nullptr);

}  // namespace pg
