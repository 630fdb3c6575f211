#include "pathograph/automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pg {

namespace {

constexpr int kMaxAlphabet = 1 << 14;

void check_alphabet(const Alphabet& ab) {
  if (ab.n > 20 || (static_cast<long long>(ab.K) << ab.n) > kMaxAlphabet) {
    throw std::runtime_error("determination alphabet too large: " + std::to_string(ab.K) +
                             " urpaths over " + std::to_string(ab.n) + " vertices");
  }
}

}  // namespace

Alphabet alphabet(const Pathograph& h) {
  Alphabet ab;
  ab.K = h.urpath_count();
  ab.n = h.vertex_count();
  check_alphabet(ab);
  return ab;
}

int symbol_id(const Alphabet& ab, const DetSymbol& s) {
  if (s.index < 0 || s.index >= ab.K) throw std::runtime_error("symbol index out of range");
  uint32_t mask = 0;
  for (VertexId v : s.nbrs) {
    if (v < 0 || v >= ab.n) throw std::runtime_error("symbol vertex out of range");
    mask |= 1u << v;
  }
  return ab.id(s.index, mask);
}

DetSymbol symbol_of(const Alphabet& ab, int sym) {
  DetSymbol s;
  s.index = ab.index_of(sym);
  uint32_t mask = ab.mask_of(sym);
  for (int v = 0; v < ab.n; ++v)
    if (mask & (1u << v)) s.nbrs.insert(v);
  return s;
}

std::vector<int> symbol_ids(const Alphabet& ab, const DetString& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (const DetSymbol& d : s) out.push_back(symbol_id(ab, d));
  return out;
}

Pathograph strip_urpaths(const Pathograph& h) {
  std::set<int> del_u;
  for (int u = 0; u < h.urpath_count(); ++u) del_u.insert(u);
  return subpathograph(h, {}, del_u);
}

int Nfa::add_state(const std::string& name, bool accept) {
  accepting.push_back(accept ? 1 : 0);
  trans.emplace_back();
  wild.emplace_back();
  eps.emplace_back();
  names.push_back(name);
  return state_count() - 1;
}

// --- determinization ---------------------------------------------------------------

namespace {

std::vector<int> eps_closure(const Nfa& n, std::vector<int> states) {
  std::set<int> seen(states.begin(), states.end());
  std::vector<int> stack = states;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : n.eps[s])
      if (seen.insert(t).second) stack.push_back(t);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Dfa determinize(const Nfa& n) {
  check_alphabet(n.ab);
  const int nsyms = n.ab.size();
  Dfa d;
  d.ab = n.ab;

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(subsets.size());
    ids.emplace(subset, id);
    subsets.push_back(std::move(subset));
    bool acc = false;
    for (int s : subsets.back())
      if (n.accepting[s]) acc = true;
    d.accepting.push_back(acc ? 1 : 0);
    d.next.emplace_back(nsyms, -1);
    return id;
  };

  d.start = intern(eps_closure(n, {n.start}));
  for (size_t cur = 0; cur < subsets.size(); ++cur) {
    for (int sym = 0; sym < nsyms; ++sym) {
      int k = n.ab.index_of(sym);
      std::set<int> to;
      for (int s : subsets[cur]) {
        for (auto [sy, t] : n.trans[s])
          if (sy == sym) to.insert(t);
        for (auto [ix, t] : n.wild[s])
          if (ix == k) to.insert(t);
      }
      int target = intern(eps_closure(n, {to.begin(), to.end()}));
      d.next[cur][sym] = target;
    }
  }
  return d;
}

Dfa minimize(const Dfa& d) {
  const int nsyms = d.ab.size();
  const int ns = d.state_count();
  if (ns == 0) throw std::runtime_error("minimize: empty automaton");

  // Keep only reachable states first.
  std::vector<int> reach(ns, -1);
  std::vector<int> order;
  reach[d.start] = 0;
  order.push_back(d.start);
  for (size_t i = 0; i < order.size(); ++i)
    for (int sym = 0; sym < nsyms; ++sym) {
      int t = d.next[order[i]][sym];
      if (reach[t] < 0) {
        reach[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }

  const int nr = static_cast<int>(order.size());
  std::vector<int> cls(nr);
  for (int i = 0; i < nr; ++i) cls[i] = d.accepting[order[i]] ? 1 : 0;

  int ncls = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(nr);
    for (int i = 0; i < nr; ++i) {
      std::vector<int> sig;
      sig.reserve(nsyms + 1);
      sig.push_back(cls[i]);
      for (int sym = 0; sym < nsyms; ++sym) sig.push_back(cls[reach[d.next[order[i]][sym]]]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      (void)fresh;
      next_cls[i] = it->second;
    }
    int nnext = static_cast<int>(sig_ids.size());
    cls.swap(next_cls);
    if (nnext == ncls) break;
    ncls = nnext;
  }

  // Renumber classes in BFS order from the start class for a canonical layout.
  Dfa m;
  m.ab = d.ab;
  std::vector<int> rep_of_cls(ncls, -1);
  for (int i = 0; i < nr; ++i)
    if (rep_of_cls[cls[i]] < 0) rep_of_cls[cls[i]] = order[i];
  std::vector<int> newid(ncls, -1);
  std::vector<int> bfs;
  newid[cls[reach[d.start]]] = 0;
  bfs.push_back(cls[reach[d.start]]);
  for (size_t i = 0; i < bfs.size(); ++i) {
    int c = bfs[i];
    int rep = rep_of_cls[c];
    for (int sym = 0; sym < nsyms; ++sym) {
      int tc = cls[reach[d.next[rep][sym]]];
      if (newid[tc] < 0) {
        newid[tc] = static_cast<int>(bfs.size());
        bfs.push_back(tc);
      }
    }
  }
  int nm = static_cast<int>(bfs.size());
  m.start = 0;
  m.accepting.assign(nm, 0);
  m.next.assign(nm, std::vector<int>(nsyms, -1));
  for (int c : bfs) {
    int id = newid[c];
    int rep = rep_of_cls[c];
    m.accepting[id] = d.accepting[rep];
    for (int sym = 0; sym < nsyms; ++sym) m.next[id][sym] = newid[cls[reach[d.next[rep][sym]]]];
  }
  return m;
}

Dfa complement(const Dfa& d) {
  Dfa c = d;
  for (auto& a : c.accepting) a = a ? 0 : 1;
  return c;
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool want_union) {
  if (a.ab.K != b.ab.K || a.ab.n != b.ab.n)
    throw std::runtime_error("automaton product: alphabet mismatch");
  const int nsyms = a.ab.size();
  Dfa p;
  p.ab = a.ab;
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](int x, int y) {
    auto it = ids.find({x, y});
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(pairs.size());
    ids.emplace(std::make_pair(x, y), id);
    pairs.push_back({x, y});
    bool acc = want_union ? (a.accepting[x] || b.accepting[y]) : (a.accepting[x] && b.accepting[y]);
    p.accepting.push_back(acc ? 1 : 0);
    p.next.emplace_back(nsyms, -1);
    return id;
  };
  p.start = intern(a.start, b.start);
  for (size_t cur = 0; cur < pairs.size(); ++cur) {
    auto [x, y] = pairs[cur];
    for (int sym = 0; sym < nsyms; ++sym) p.next[cur][sym] = intern(a.next[x][sym], b.next[y][sym]);
  }
  return p;
}

}  // namespace

Dfa dfa_union(const Dfa& a, const Dfa& b) { return product(a, b, true); }
Dfa dfa_intersect(const Dfa& a, const Dfa& b) { return product(a, b, false); }

Nfa nfa_union(const std::vector<Nfa>& machines) {
  if (machines.empty()) throw std::runtime_error("nfa_union: no machines");
  Nfa u;
  u.ab = machines.front().ab;
  u.start = u.add_state("union-start");
  for (const Nfa& m : machines) {
    if (m.ab.K != u.ab.K || m.ab.n != u.ab.n)
      throw std::runtime_error("nfa_union: alphabet mismatch");
    int base = u.state_count();
    for (int s = 0; s < m.state_count(); ++s) u.add_state(m.names[s], m.accepting[s]);
    for (int s = 0; s < m.state_count(); ++s) {
      for (auto [sym, t] : m.trans[s]) u.add_trans(base + s, sym, base + t);
      for (auto [ix, t] : m.wild[s]) u.add_wild(base + s, ix, base + t);
      for (int t : m.eps[s]) u.add_eps(base + s, base + t);
    }
    u.add_eps(u.start, base + m.start);
  }
  return u;
}

bool run(const Dfa& d, const std::vector<int>& word) {
  int s = d.start;
  for (int sym : word) {
    if (sym < 0 || sym >= d.ab.size()) throw std::runtime_error("run: symbol out of range");
    s = d.next[s][sym];
  }
  return d.accepting[s];
}

long run_steps(const Dfa& d, const std::vector<int>& word, bool* accepted) {
  int s = d.start;
  long steps = 0;
  for (int sym : word) {
    if (sym < 0 || sym >= d.ab.size()) throw std::runtime_error("run: symbol out of range");
    s = d.next[s][sym];
    ++steps;
  }
  if (accepted) *accepted = d.accepting[s];
  return steps;
}

Emptiness is_empty(const Dfa& d) {
  const int nsyms = d.ab.size();
  Emptiness e;
  if (d.accepting[d.start]) {
    e.empty = false;
    return e;
  }
  std::vector<std::pair<int, int>> from(d.state_count(), {-1, -1});  // (prev state, symbol)
  std::vector<char> seen(d.state_count(), 0);
  std::queue<int> q;
  seen[d.start] = 1;
  q.push(d.start);
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    for (int sym = 0; sym < nsyms; ++sym) {
      int t = d.next[s][sym];
      if (seen[t]) continue;
      seen[t] = 1;
      from[t] = {s, sym};
      if (d.accepting[t]) {
        std::vector<int> w;
        for (int cur = t; cur != d.start; cur = from[cur].first) w.push_back(from[cur].second);
        std::reverse(w.begin(), w.end());
        e.empty = false;
        e.witness = std::move(w);
        return e;
      }
      q.push(t);
    }
  }
  return e;
}

EquivResult equivalent(const Dfa& a, const Dfa& b) {
  Dfa diff = product(a, b, true);
  // Re-mark: accept where exactly one side accepts.
  {
    // product() stored union acceptance; rebuild symmetric difference by
    // walking the same pair interning order.
    diff = [&] {
      const int nsyms = a.ab.size();
      Dfa p;
      p.ab = a.ab;
      std::map<std::pair<int, int>, int> ids;
      std::vector<std::pair<int, int>> pairs;
      auto intern = [&](int x, int y) {
        auto it = ids.find({x, y});
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(pairs.size());
        ids.emplace(std::make_pair(x, y), id);
        pairs.push_back({x, y});
        p.accepting.push_back((a.accepting[x] != b.accepting[y]) ? 1 : 0);
        p.next.emplace_back(nsyms, -1);
        return id;
      };
      p.start = intern(a.start, b.start);
      for (size_t cur = 0; cur < pairs.size(); ++cur) {
        auto [x, y] = pairs[cur];
        for (int sym = 0; sym < nsyms; ++sym)
          p.next[cur][sym] = intern(a.next[x][sym], b.next[y][sym]);
      }
      return p;
    }();
  }
  Emptiness e = is_empty(diff);
  EquivResult r;
  r.equal = e.empty;
  r.counterexample = e.witness;
  return r;
}

// --- regular expressions --------------------------------------------------------

namespace {

struct RegexToken {
  enum Kind { kSymbol, kLParen, kRParen, kBar, kStar, kEnd } kind;
  int sym = -1;
};

std::vector<RegexToken> tokenize_regex(const Pathograph& h, const Alphabet& ab,
                                       const std::string& text) {
  std::vector<RegexToken> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({RegexToken::kLParen, -1});
      ++i;
    } else if (c == ')') {
      out.push_back({RegexToken::kRParen, -1});
      ++i;
    } else if (c == '|') {
      out.push_back({RegexToken::kBar, -1});
      ++i;
    } else if (c == '*') {
      out.push_back({RegexToken::kStar, -1});
      ++i;
    } else {
      size_t j = i;
      while (j < text.size() && text[j] != '{') ++j;
      if (j == text.size()) throw std::runtime_error("regex: malformed symbol token");
      size_t k = text.find('}', j);
      if (k == std::string::npos) throw std::runtime_error("regex: unterminated symbol token");
      DetSymbol s = parse_det_symbol(h, text.substr(i, k - i + 1));
      out.push_back({RegexToken::kSymbol, symbol_id(ab, s)});
      i = k + 1;
    }
  }
  out.push_back({RegexToken::kEnd, -1});
  return out;
}

// Thompson construction with (start, accept) fragments.
struct RegexParser {
  const std::vector<RegexToken>& toks;
  size_t pos = 0;
  Nfa& n;

  RegexToken peek() const { return toks[pos]; }
  void eat() { ++pos; }

  std::pair<int, int> parse_alt() {
    auto frag = parse_concat();
    while (peek().kind == RegexToken::kBar) {
      eat();
      auto rhs = parse_concat();
      int s = n.add_state("alt");
      int a = n.add_state("alt-end");
      n.add_eps(s, frag.first);
      n.add_eps(s, rhs.first);
      n.add_eps(frag.second, a);
      n.add_eps(rhs.second, a);
      frag = {s, a};
    }
    return frag;
  }

  std::pair<int, int> parse_concat() {
    auto frag = parse_rep();
    while (peek().kind == RegexToken::kSymbol || peek().kind == RegexToken::kLParen) {
      auto rhs = parse_rep();
      n.add_eps(frag.second, rhs.first);
      frag = {frag.first, rhs.second};
    }
    return frag;
  }

  std::pair<int, int> parse_rep() {
    auto frag = parse_atom();
    while (peek().kind == RegexToken::kStar) {
      eat();
      int s = n.add_state("star");
      int a = n.add_state("star-end");
      n.add_eps(s, a);
      n.add_eps(s, frag.first);
      n.add_eps(frag.second, a);
      n.add_eps(a, s);
      frag = {s, a};
    }
    return frag;
  }

  std::pair<int, int> parse_atom() {
    RegexToken t = peek();
    if (t.kind == RegexToken::kSymbol) {
      eat();
      int s = n.add_state("sym");
      int a = n.add_state("sym-end");
      n.add_trans(s, t.sym, a);
      return {s, a};
    }
    if (t.kind == RegexToken::kLParen) {
      eat();
      if (peek().kind == RegexToken::kRParen) {  // `()` is the empty word
        eat();
        int s = n.add_state("eps");
        int a = n.add_state("eps-end");
        n.add_eps(s, a);
        return {s, a};
      }
      auto frag = parse_alt();
      if (peek().kind != RegexToken::kRParen) throw std::runtime_error("regex: missing ')'");
      eat();
      return frag;
    }
    throw std::runtime_error("regex: expected symbol or '('");
  }
};

}  // namespace

Nfa regex_to_nfa(const Pathograph& h, const std::string& text) {
  Alphabet ab = alphabet(h);
  Nfa n;
  n.ab = ab;
  std::vector<RegexToken> toks = tokenize_regex(h, ab, text);
  RegexParser p{toks, 0, n};
  auto frag = p.parse_alt();
  if (p.peek().kind != RegexToken::kEnd) throw std::runtime_error("regex: trailing input");
  n.start = frag.first;
  n.accepting[frag.second] = 1;
  return n;
}

// --- regex emission (state elimination) -----------------------------------------

namespace {

// Labels form a small algebra over optional regex strings; absence of a label
// means the empty language, "" means the empty word.
struct Label {
  bool present = false;
  std::string re;
};

std::string parenthesize(const std::string& s, bool needed) {
  return needed ? "(" + s + ")" : s;
}

bool is_atom(const std::string& s) {
  if (s.empty()) return false;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '|' || c == ' ') && i + 1 < s.size()) return false;
  }
  return true;
}

Label label_union(const Label& a, const Label& b) {
  if (!a.present) return b;
  if (!b.present) return a;
  if (a.re == b.re) return a;
  // The empty word has no bare spelling, so it joins alternations as `()`.
  std::string ar = a.re.empty() ? "()" : a.re;
  std::string br = b.re.empty() ? "()" : b.re;
  return {true, ar + "|" + br};
}

bool has_top_bar(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == '|') return true;
  }
  return false;
}

Label label_concat(const Label& a, const Label& b) {
  if (!a.present || !b.present) return {};
  if (a.re.empty()) return b;
  if (b.re.empty()) return a;
  return {true, parenthesize(a.re, has_top_bar(a.re)) + " " + parenthesize(b.re, has_top_bar(b.re))};
}

Label label_star(const Label& a) {
  if (!a.present || a.re.empty()) return {true, ""};
  return {true, parenthesize(a.re, !is_atom(a.re)) + "*"};
}

}  // namespace

std::string dfa_to_regex(const Pathograph& h, const Dfa& d) {
  Alphabet ab = alphabet(h);
  if (ab.K != d.ab.K || ab.n != d.ab.n) throw std::runtime_error("dfa_to_regex: alphabet mismatch");
  const int ns = d.state_count();
  const int nsyms = ab.size();

  // Generalized machine over states 0..ns-1 plus fresh start ns and accept ns+1.
  int N = ns + 2;
  std::vector<std::vector<Label>> lab(N, std::vector<Label>(N));
  for (int s = 0; s < ns; ++s)
    for (int sym = 0; sym < nsyms; ++sym) {
      DetSymbol ds = symbol_of(ab, sym);
      Label atom{true, write_det_symbol(h, ds)};
      lab[s][d.next[s][sym]] = label_union(lab[s][d.next[s][sym]], atom);
    }
  lab[ns][d.start] = {true, ""};
  for (int s = 0; s < ns; ++s)
    if (d.accepting[s]) lab[s][ns + 1] = {true, ""};

  std::vector<char> alive(N, 1);
  for (int round = 0; round < ns; ++round) {
    // Eliminate the live interior state with the fewest incident labels.
    int best = -1;
    long best_score = -1;
    for (int s = 0; s < ns; ++s) {
      if (!alive[s]) continue;
      long ins = 0, outs = 0;
      for (int t = 0; t < N; ++t) {
        if (t != s && alive[t] && lab[t][s].present) ++ins;
        if (t != s && alive[t] && lab[s][t].present) ++outs;
      }
      long score = ins * outs;
      if (best < 0 || score < best_score) {
        best = s;
        best_score = score;
      }
    }
    int s = best;
    alive[s] = 0;
    Label loop = label_star(lab[s][s]);
    for (int p = 0; p < N; ++p) {
      if (!alive[p] || !lab[p][s].present) continue;
      for (int q = 0; q < N; ++q) {
        if (!alive[q] || !lab[s][q].present) continue;
        Label through = label_concat(label_concat(lab[p][s], loop), lab[s][q]);
        lab[p][q] = label_union(lab[p][q], through);
      }
    }
  }

  const Label& result = lab[ns][ns + 1];
  if (!result.present) return "(none)";
  if (result.re.empty()) return "()";
  return result.re;
}

std::string write_dfa(const Pathograph& h, const Dfa& d) {
  std::ostringstream os;
  os << "states: " << d.state_count() << "\n";
  os << "start: S" << d.start << "\n";
  os << "accept:";
  for (int s = 0; s < d.state_count(); ++s)
    if (d.accepting[s]) os << " S" << s;
  os << "\n";
  for (int s = 0; s < d.state_count(); ++s)
    for (int sym = 0; sym < d.ab.size(); ++sym)
      os << "S" << s << " " << write_det_symbol(h, symbol_of(d.ab, sym)) << " S" << d.next[s][sym]
         << "\n";
  return os.str();
}

}  // namespace pg
