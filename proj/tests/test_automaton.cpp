#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathograph/automaton.hpp"
#include "pathograph/core.hpp"
#include "pathograph/formats.hpp"
#include "pathograph/realization.hpp"
#include "pathograph/truemper.hpp"
#include "support/fixtures.hpp"

using namespace pg;
using namespace fixtures;

namespace {

std::vector<Pathograph> theta_wheel() {
  std::vector<Pathograph> fam = theta_family();
  for (const Pathograph& p : wheel_family()) fam.push_back(p);
  return fam;
}

std::vector<int> word_of(const Pathograph& h, const Alphabet& ab, const std::string& text) {
  return symbol_ids(ab, parse_det_string(h, text));
}

/// Reference NFA acceptance by direct subset simulation, independent of the
/// library's determinization.
struct SubsetSim {
  const Nfa& n;

  std::set<int> closure(std::set<int> s) const {
    std::vector<int> stack(s.begin(), s.end());
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (int t : n.eps[q])
        if (s.insert(t).second) stack.push_back(t);
    }
    return s;
  }

  bool accepts(const std::vector<int>& word) const {
    std::set<int> cur = closure({n.start});
    for (int sym : word) {
      std::set<int> nxt;
      for (int q : cur) {
        for (const auto& [s, t] : n.trans[q])
          if (s == sym) nxt.insert(t);
        for (const auto& [idx, t] : n.wild[q])
          if (idx == n.ab.index_of(sym)) nxt.insert(t);
      }
      cur = closure(nxt);
      if (cur.empty()) return false;
    }
    for (int q : cur)
      if (n.accepting[q]) return true;
    return false;
  }
};

/// All words over the alphabet of length at most max_len, shortest first and
/// lexicographic within a length.
std::vector<std::vector<int>> all_words(int alphabet_size, int max_len) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (int s = 0; s < alphabet_size; ++s) {
        std::vector<int> w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

Nfa random_nfa(std::mt19937& rng, const Alphabet& ab) {
  Nfa n;
  n.ab = ab;
  std::uniform_int_distribution<int> nstates(1, 5);
  int states = nstates(rng);
  for (int i = 0; i < states; ++i)
    n.add_state("q" + std::to_string(i), rng() % 3 == 0);
  n.start = static_cast<int>(rng() % states);
  std::uniform_int_distribution<int> ntrans(0, 2 * states + 2);
  int trans = ntrans(rng);
  for (int i = 0; i < trans; ++i) {
    int from = static_cast<int>(rng() % states);
    int to = static_cast<int>(rng() % states);
    switch (rng() % 4) {
      case 0:
        n.add_eps(from, to);
        break;
      case 1:
        n.add_wild(from, static_cast<int>(rng() % ab.K), to);
        break;
      default:
        n.add_trans(from, static_cast<int>(rng() % ab.size()), to);
        break;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("alphabet enumerates urpath-index and neighbour-set pairs") {
  Pathograph h = spoked_square();
  Alphabet ab = alphabet(h);
  CHECK(ab.K == 1);
  CHECK(ab.n == 4);
  CHECK(ab.size() == 16);

  Pathograph w1 = hub_two_arcs();
  Alphabet ab2 = alphabet(w1);
  CHECK(ab2.K == 2);
  CHECK(ab2.n == 3);
  CHECK(ab2.size() == 16);

  Pathograph plain = cycle_graph(4);
  CHECK(alphabet(plain).size() == 0);

  for (int sym = 0; sym < ab2.size(); ++sym) {
    DetSymbol s = symbol_of(ab2, sym);
    CHECK(symbol_id(ab2, s) == sym);
  }
  // Vertex a is bit 0, b is bit 1: {a,b} with the single urpath is id 3.
  CHECK(symbol_id(ab, DetSymbol{0, {0, 1}}) == 3);
  CHECK(word_of(h, ab, "1:{a,b} 1:{c,d}") == std::vector<int>{3, 12});
}

TEST_CASE("strip_urpaths keeps the vertex part only") {
  Pathograph g = strip_urpaths(spoked_square());
  CHECK(g.urpath_count() == 0);
  CHECK(g.spokes.empty());
  CHECK(is_isomorphic(g, cycle_graph(4)));

  Pathograph t = strip_urpaths(theta_family()[0]);
  CHECK(t.vertex_count() == 2);
  CHECK(t.edges.empty());
}

TEST_CASE("partial inclusions of a single vertex into a square") {
  Pathograph H = strip_urpaths(spoked_square());
  auto incs = enumerate_partial_inclusions(path_graph(1), H);
  CHECK(incs.size() == 5);
  int undetermined = 0;
  std::set<int> images;
  for (const auto& phi : incs) {
    REQUIRE(phi.vmap.size() == 1);
    if (phi.vmap[0] < 0)
      undetermined++;
    else
      images.insert(phi.vmap[0]);
  }
  CHECK(undetermined == 1);
  CHECK(images == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("the worked partial inclusion appears and its machine separates the pinned strings") {
  Pathograph f = hub_two_arcs();
  Pathograph h = spoked_square();
  Pathograph H = strip_urpaths(h);

  // Hub undetermined, arc ends on b and d; one arc fully cut through the
  // square as b-a-d, the other leaving two single-vertex stubs b and d.
  auto incs = enumerate_partial_inclusions(f, H);
  const PartialInclusion* worked = nullptr;
  for (const auto& phi : incs) {
    if (phi.vmap != std::vector<VertexId>{1, 3, -1}) continue;
    if (!phi.fragmap[0] || !phi.fragmap[1]) continue;
    const auto& f0 = *phi.fragmap[0];
    const auto& f1 = *phi.fragmap[1];
    if (f0.size() != 1 || f0[0].verts != std::vector<VertexId>{1, 0, 3}) continue;
    if (f1.size() != 2) continue;
    std::set<std::vector<VertexId>> stubs{f1[0].verts, f1[1].verts};
    if (stubs != std::set<std::vector<VertexId>>{{1}, {3}}) continue;
    worked = &phi;
  }
  REQUIRE(worked != nullptr);

  Dfa m = determinize(build_mphi(f, h, *worked));
  Alphabet ab = alphabet(h);
  CHECK(run(m, word_of(h, ab, "1:{b,d} 1:{b,c} 1:{d}")));
  CHECK_FALSE(run(m, word_of(h, ab, "1:{b} 1:{c} 1:{b}")));
}

TEST_CASE("ill-formedness machine agrees with string reconstruction word by word") {
  for (const Pathograph& h : {spoked_square(), hub_two_arcs()}) {
    Alphabet ab = alphabet(h);
    Dfa ill = minimize(determinize(build_illformed(h)));
    int checked_spoke_residue = 0;
    for (const auto& w : all_words(ab.size(), 3)) {
      DetString ds;
      for (int sym : w) ds.push_back(symbol_of(ab, sym));
      CAPTURE(write_det_string(h, ds));
      std::string why;
      auto r = realization_from_string(h, ds, &why);
      if (run(ill, w)) {
        // Ill-formed words never reconstruct.
        REQUIRE_FALSE(r.has_value());
      } else if (r.has_value()) {
        // Well-formed words that reconstruct do so faithfully.
        REQUIRE(determination_string(h, *r) == ds);
      } else {
        // The only well-formed failures are spoke witnesses never named.
        REQUIRE(why.find("spoke") != std::string::npos);
        checked_spoke_residue++;
      }
    }
    CHECK(checked_spoke_residue > 0);
  }
}

TEST_CASE("ill-formedness machine classifies pinned strings") {
  Pathograph h = spoked_square();
  Alphabet ab = alphabet(h);
  Dfa ill = minimize(determinize(build_illformed(h)));

  CHECK(run(ill, {}));                                         // urpath never covered
  CHECK(run(ill, word_of(h, ab, "1:{b}")));                    // left end missing
  CHECK(run(ill, word_of(h, ab, "1:{a,c} 1:{c,d}")));          // right end too early
  CHECK(run(ill, word_of(h, ab, "1:{a,b} 1:{a,d} 1:{c}")));    // left end repeated
  CHECK_FALSE(run(ill, word_of(h, ab, "1:{a,c}")));            // well formed (no spoke use)
  CHECK_FALSE(run(ill, word_of(h, ab, "1:{a,b} 1:{c,d}")));

  Pathograph w1 = hub_two_arcs();
  Alphabet ab2 = alphabet(w1);
  Dfa ill2 = minimize(determinize(build_illformed(w1)));
  CHECK(run(ill2, word_of(w1, ab2, "1:{X,Y} 1:{X,Y}")));  // decreasing? no: second urpath missing
  CHECK(run(ill2, word_of(w1, ab2, "2:{X,Y,Z} 1:{X,Y}")));  // decreasing index
  CHECK(run(ill2, word_of(w1, ab2, "1:{X,Y,Z} 2:{X,Y,Z}")));  // Z illegal on first urpath
  CHECK_FALSE(run(ill2, word_of(w1, ab2, "1:{X,Y} 2:{X,Y,Z}")));
}

TEST_CASE("determinization matches direct subset simulation on random machines") {
  std::mt19937 rng(20260816);
  Alphabet small;
  small.K = 2;
  small.n = 1;  // four symbols
  auto words = all_words(small.size(), 4);
  for (int trial = 0; trial < 60; ++trial) {
    Nfa n = random_nfa(rng, small);
    SubsetSim sim{n};
    Dfa d = determinize(n);
    Dfa m = minimize(d);
    CHECK(m.state_count() <= d.state_count());
    Dfa cc = complement(complement(d));
    for (const auto& w : words) {
      bool expect = sim.accepts(w);
      REQUIRE(run(d, w) == expect);
      REQUIRE(run(m, w) == expect);
      REQUIRE(run(cc, w) == expect);
      REQUIRE(run(complement(d), w) == !expect);
    }
  }
}

TEST_CASE("boolean combinations satisfy De Morgan duality") {
  std::mt19937 rng(7);
  Alphabet small;
  small.K = 1;
  small.n = 2;
  auto words = all_words(small.size(), 4);
  for (int trial = 0; trial < 20; ++trial) {
    Dfa a = determinize(random_nfa(rng, small));
    Dfa b = determinize(random_nfa(rng, small));
    Dfa u = dfa_union(a, b);
    Dfa i = dfa_intersect(a, b);
    Dfa dual = complement(dfa_intersect(complement(a), complement(b)));
    for (const auto& w : words) {
      REQUIRE(run(u, w) == (run(a, w) || run(b, w)));
      REQUIRE(run(i, w) == (run(a, w) && run(b, w)));
      REQUIRE(run(dual, w) == run(u, w));
    }
    CHECK(equivalent(u, dual).equal);
  }
}

TEST_CASE("nfa_union accepts the union of its parts") {
  std::mt19937 rng(11);
  Alphabet small;
  small.K = 1;
  small.n = 2;
  auto words = all_words(small.size(), 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Nfa> parts;
    for (int i = 0; i < 3; ++i) parts.push_back(random_nfa(rng, small));
    Dfa u = determinize(nfa_union(parts));
    for (const auto& w : words) {
      bool expect = false;
      for (const auto& p : parts) expect = expect || SubsetSim{p}.accepts(w);
      REQUIRE(run(u, w) == expect);
    }
  }
}

TEST_CASE("regular expressions round-trip through machines") {
  Pathograph h = spoked_square();
  Alphabet ab = alphabet(h);
  std::string text = "(1:{a,b} 1:{}* 1:{c,d})|(1:{a,d} 1:{}* 1:{c,b})";
  Dfa d = minimize(determinize(regex_to_nfa(h, text)));

  CHECK(run(d, word_of(h, ab, "1:{a,b} 1:{c,d}")));
  CHECK(run(d, word_of(h, ab, "1:{a,b} 1:{} 1:{c,d}")));
  CHECK(run(d, word_of(h, ab, "1:{a,b} 1:{} 1:{} 1:{c,d}")));
  CHECK(run(d, word_of(h, ab, "1:{a,d} 1:{c,b}")));
  CHECK(run(d, word_of(h, ab, "1:{a,d} 1:{} 1:{c,b}")));
  CHECK_FALSE(run(d, word_of(h, ab, "1:{a,b} 1:{c,b}")));
  CHECK_FALSE(run(d, word_of(h, ab, "1:{a,b}")));
  CHECK_FALSE(run(d, std::vector<int>{}));

  std::string back = dfa_to_regex(h, d);
  Dfa d2 = minimize(determinize(regex_to_nfa(h, back)));
  CHECK(equivalent(d, d2).equal);

  Dfa comp = complement(d);
  Dfa comp2 = minimize(determinize(regex_to_nfa(h, dfa_to_regex(h, comp))));
  CHECK(equivalent(comp, comp2).equal);
}

TEST_CASE("decision machine for the spoked square against theta and wheel families") {
  Pathograph h = spoked_square();
  Alphabet ab = alphabet(h);
  Dfa d = build_decision_dfa(h, theta_wheel());

  Emptiness e = is_empty(d);
  REQUIRE_FALSE(e.empty);
  DetString witness;
  for (int sym : e.witness) witness.push_back(symbol_of(ab, sym));
  CHECK(write_det_string(h, witness) == "1:{a,b} 1:{c,d}");

  std::string text = "(1:{a,b} 1:{}* 1:{c,d})|(1:{a,d} 1:{}* 1:{c,b})";
  Dfa rx = minimize(determinize(regex_to_nfa(h, text)));
  CHECK(equivalent(d, rx).equal);

  bool accepted = false;
  CHECK(run_steps(d, e.witness, &accepted) == static_cast<long>(e.witness.size()));
  CHECK(accepted);
}

TEST_CASE("decision machine with the full Truemper family is empty") {
  Pathograph h = spoked_square();
  Dfa d = build_decision_dfa(h, truemper_family());
  CHECK(is_empty(d).empty);
}

TEST_CASE("decision machine with no family accepts exactly the realization strings") {
  Pathograph h = spoked_square();
  Dfa d = build_decision_dfa(h, {});
  Dfa ill = minimize(determinize(build_illformed(h)));
  Dfa unc = minimize(determinize(build_uncovered(h)));
  CHECK(equivalent(d, complement(minimize(dfa_union(ill, unc)))).equal);

  // Duty check on the coverage machine itself: a string may be well formed yet
  // name no witness for some spoke, and such strings are not realizations.
  Alphabet ab = alphabet(h);
  CHECK(run(unc, word_of(h, ab, "1:{a,c}")));
  CHECK_FALSE(run(unc, word_of(h, ab, "1:{a,b} 1:{c,d}")));
  CHECK_FALSE(run(ill, word_of(h, ab, "1:{a,c}")));
  CHECK_FALSE(run(d, word_of(h, ab, "1:{a,c}")));
  CHECK(run(d, word_of(h, ab, "1:{a,b} 1:{c,d}")));
}

TEST_CASE("inequivalent machines produce a checking counterexample") {
  Pathograph h = spoked_square();
  Dfa a = build_decision_dfa(h, theta_wheel());
  Dfa b = build_decision_dfa(h, truemper_family());
  EquivResult r = equivalent(a, b);
  REQUIRE_FALSE(r.equal);
  CHECK(run(a, r.counterexample) != run(b, r.counterexample));
}

TEST_CASE("decision machine on a source with no urpaths reads the empty string") {
  Pathograph h = path_graph(2);
  CHECK(alphabet(h).size() == 0);

  Dfa free_case = build_decision_dfa(h, {complete_graph(3)});
  Emptiness e = is_empty(free_case);
  REQUIRE_FALSE(e.empty);
  CHECK(e.witness.empty());

  Dfa hit_case = build_decision_dfa(h, {complete_graph(2)});
  CHECK(is_empty(hit_case).empty);
}

TEST_CASE("decision machine rejects sources with rungs") {
  std::mt19937 rng(3);
  Pathograph h = random_one_rung(rng, 3, 1);
  CHECK_THROWS_AS(build_decision_dfa(h, {}), std::invalid_argument);
}
