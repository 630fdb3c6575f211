#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathograph/core.hpp"
#include "pathograph/formats.hpp"

namespace pg {

// --- alphabet -------------------------------------------------------------------
//
// Determination symbols for a source pathograph h with K urpaths and n
// vertices: pairs (k, X) with k an urpath index and X a vertex subset,
// enumerated as id = k * 2^n + mask.  Symbol ids order first by index, then by
// subset mask with earlier-declared vertices in lower bits.

struct Alphabet {
  int K = 0;
  int n = 0;
  int size() const { return K << n; }
  int id(int k, uint32_t mask) const { return (k << n) | static_cast<int>(mask); }
  int index_of(int sym) const { return sym >> n; }
  uint32_t mask_of(int sym) const { return static_cast<uint32_t>(sym) & ((1u << n) - 1); }
};

Alphabet alphabet(const Pathograph& h);

int symbol_id(const Alphabet& ab, const DetSymbol& s);
DetSymbol symbol_of(const Alphabet& ab, int sym);
std::vector<int> symbol_ids(const Alphabet& ab, const DetString& s);

/** Drop all urpaths (and with them all spokes and rungs), keeping vertices. */
Pathograph strip_urpaths(const Pathograph& h);

// --- machines -------------------------------------------------------------------

struct Nfa {
  Alphabet ab;
  int start = 0;
  std::vector<char> accepting;
  std::vector<std::vector<std::pair<int, int>>> trans;  // (symbol, target)
  std::vector<std::vector<std::pair<int, int>>> wild;   // (index, target): any symbol of index
  std::vector<std::vector<int>> eps;
  std::vector<std::string> names;

  int state_count() const { return static_cast<int>(accepting.size()); }
  int add_state(const std::string& name, bool accept = false);
  void add_trans(int from, int sym, int to) { trans[from].push_back({sym, to}); }
  void add_wild(int from, int index, int to) { wild[from].push_back({index, to}); }
  void add_eps(int from, int to) { eps[from].push_back(to); }
};

struct Dfa {
  Alphabet ab;
  int start = 0;
  std::vector<char> accepting;
  std::vector<std::vector<int>> next;  // complete: state x symbol -> state

  int state_count() const { return static_cast<int>(accepting.size()); }
};

Dfa determinize(const Nfa& n);
Dfa minimize(const Dfa& d);
Dfa complement(const Dfa& d);
Dfa dfa_union(const Dfa& a, const Dfa& b);
Dfa dfa_intersect(const Dfa& a, const Dfa& b);
Nfa nfa_union(const std::vector<Nfa>& machines);

bool run(const Dfa& d, const std::vector<int>& word);
/** Transition count equals word length; exposed for cost accounting. */
long run_steps(const Dfa& d, const std::vector<int>& word, bool* accepted);

struct Emptiness {
  bool empty = true;
  std::vector<int> witness;  // shortest accepted word, lexicographically least
};
Emptiness is_empty(const Dfa& d);

struct EquivResult {
  bool equal = true;
  std::vector<int> counterexample;  // accepted by exactly one side
};
EquivResult equivalent(const Dfa& a, const Dfa& b);

// --- regular expressions ---------------------------------------------------------
//
// Grammar: alternation `|`, postfix `*`, parentheses, juxtaposition for
// concatenation; atoms are determination symbols `k:{v1,v2}`.

Nfa regex_to_nfa(const Pathograph& h, const std::string& text);
std::string dfa_to_regex(const Pathograph& h, const Dfa& d);

std::string write_dfa(const Pathograph& h, const Dfa& d);

// --- partial inclusions ---------------------------------------------------------

/**
 * A partly determined inclusion of f into the vertex part H of a source
 * pathograph: vertices map to H or are undetermined (-1); each urpath either
 * carries the set of maximal segments its image cuts through H (pairwise
 * disjoint, pairwise nonadjacent paths), or is fully undetermined (nullopt,
 * never an empty set).
 */
struct PartialInclusion {
  std::vector<int> vmap;
  std::vector<std::optional<std::vector<PathSub>>> fragmap;

  bool completed(const Pathograph& f, int u) const;
};

std::vector<PartialInclusion> enumerate_partial_inclusions(const Pathograph& f,
                                                           const Pathograph& H);

/** Restriction of a full inclusion into a realization carrier graph. */
PartialInclusion restrict_inclusion(const Pathograph& f, const Pathograph& H,
                                    const Inclusion& inc);

// --- search data ------------------------------------------------------------------
//
// One fully decided way the undetermined part of a partial inclusion could lie
// on the replacement paths: sought objects (single vertices and connector
// paths), their H-adjacency requirements and permissions, required/permitted
// adjacency between sought objects, a placement onto urpath indices, and a
// total order per index.

struct SearchAnchor {
  bool is_h = false;
  int h_vertex = -1;  // when is_h
  int obj = -1;       // otherwise: sought object id
};

struct SearchObject {
  bool is_path = false;
  SearchAnchor entry, exit;  // only for paths
  uint32_t req_mask = 0;     // H-vertices that must appear in the object's labels
  uint32_t allow_mask = 0;   // H-vertices that may appear without obligation
  int place = 0;             // index of the replacement path carrying the object
};

struct SearchData {
  std::vector<SearchObject> objects;
  std::set<std::pair<int, int>> req_pairs;    // sought pairs that must be adjacent
  std::set<std::pair<int, int>> allow_pairs;  // sought pairs free to be adjacent
  std::vector<std::vector<int>> order;        // per index: object ids in order
};

std::vector<SearchData> enumerate_search_data(const Pathograph& f, const Pathograph& h,
                                              const Pathograph& H, const PartialInclusion& phi);

// --- machine builders ---------------------------------------------------------------

Nfa build_md(const Pathograph& h, const SearchData& d);
Nfa build_mphi(const Pathograph& f, const Pathograph& h, const PartialInclusion& phi);
Nfa build_illformed(const Pathograph& h);

/** Strings that leave some spoke of h without any witness symbol. */
Nfa build_uncovered(const Pathograph& h);

/**
 * Complement of (ill-formed strings, spoke-uncovered strings, and all
 * family-member matchers together): the language of determination strings of
 * family-free realizations of h.  Requires h itself to be rung-free; family
 * members may carry rungs.
 */
Dfa build_decision_dfa(const Pathograph& h, const std::vector<Pathograph>& family);

}  // namespace pg
