#include "pathograph/closedcase.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "pathograph/automaton.hpp"

namespace pg {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

// A redistribution target for one spoke or rung incident to a split urpath:
// onto the pinned vertex itself, or onto one of the two side urpaths.
enum class Onto { kPin, kASide, kBSide };

struct SplitPlan {
  bool a_is_edge = false;  // side toward the left endpoint collapses to an edge
  bool b_is_edge = false;
};

std::vector<Onto> targets_for(const SplitPlan& plan) {
  std::vector<Onto> out{Onto::kPin};
  if (!plan.a_is_edge) out.push_back(Onto::kASide);
  if (!plan.b_is_edge) out.push_back(Onto::kBSide);
  return out;
}

}  // namespace

std::vector<RungSplit> eliminate_rung(const Pathograph& h, std::pair<UrpathId, UrpathId> rung) {
  if (rung.first > rung.second) std::swap(rung.first, rung.second);
  if (!h.rungs.count(rung)) throw std::invalid_argument("rung split: rung not present");
  const auto [ux, uy] = rung;
  const auto [ax, bx] = h.urpath_ends[ux];
  const auto [ay, by] = h.urpath_ends[uy];

  // Elements to redistribute, in deterministic set order.
  std::vector<VertexId> spokes_x, spokes_y;
  for (const auto& [v, u] : h.spokes) {
    if (u == ux) spokes_x.push_back(v);
    if (u == uy) spokes_y.push_back(v);
  }
  std::vector<UrpathId> rungs_x, rungs_y;
  for (const auto& [p, q] : h.rungs) {
    if (p == ux && q == uy) continue;  // the rung being split
    if (p == ux) rungs_x.push_back(q);
    if (q == ux) rungs_x.push_back(p);
    if (p == uy) rungs_y.push_back(q);
    if (q == uy) rungs_y.push_back(p);
  }

  std::vector<RungSplit> out;
  std::set<std::string> seen;

  for (int mask = 0; mask < 16; ++mask) {
    SplitPlan px{(mask & 1) != 0, (mask & 2) != 0};
    SplitPlan py{(mask & 4) != 0, (mask & 8) != 0};
    const std::vector<Onto> tx = targets_for(px), ty = targets_for(py);

    // One choice slot per redistributed element; odometer, rightmost fastest.
    std::vector<const std::vector<Onto>*> slots;
    for (size_t i = 0; i < spokes_x.size(); ++i) slots.push_back(&tx);
    for (size_t i = 0; i < spokes_y.size(); ++i) slots.push_back(&ty);
    for (size_t i = 0; i < rungs_x.size(); ++i) slots.push_back(&tx);
    for (size_t i = 0; i < rungs_y.size(); ++i) slots.push_back(&ty);
    std::vector<size_t> pick(slots.size(), 0);

    while (true) {
      RungSplit s;
      s.ux = ux;
      s.uy = uy;
      Pathograph& m = s.member;
      for (const std::string& name : h.vertex_names) m.add_vertex(name);
      s.cx = m.add_vertex(fresh_name(m.vertex_names, h.urpath_names[ux] + ":c"));
      s.cy = m.add_vertex(fresh_name(m.vertex_names, h.urpath_names[uy] + ":c"));
      for (const auto& [a, b] : h.edges) m.add_edge(a, b);
      m.add_edge(s.cx, s.cy);

      s.urpath_map.assign(h.urpath_count(), -1);
      for (UrpathId u = 0; u < h.urpath_count(); ++u) {
        const auto [l, r] = h.urpath_ends[u];
        const std::string& name = h.urpath_names[u];
        if (u == ux) {
          if (px.a_is_edge)
            m.add_edge(ax, s.cx);
          else
            s.ax_side = m.add_urpath(fresh_name(m.urpath_names, name + ":a"), ax, s.cx);
          if (px.b_is_edge)
            m.add_edge(s.cx, bx);
          else
            s.bx_side = m.add_urpath(fresh_name(m.urpath_names, name + ":b"), s.cx, bx);
        } else if (u == uy) {
          if (py.a_is_edge)
            m.add_edge(ay, s.cy);
          else
            s.ay_side = m.add_urpath(fresh_name(m.urpath_names, name + ":a"), ay, s.cy);
          if (py.b_is_edge)
            m.add_edge(s.cy, by);
          else
            s.by_side = m.add_urpath(fresh_name(m.urpath_names, name + ":b"), s.cy, by);
        } else {
          s.urpath_map[u] = m.add_urpath(name, l, r);
        }
      }

      auto place = [&](bool on_x, Onto t, bool is_spoke, int elem) {
        const VertexId pin = on_x ? s.cx : s.cy;
        const UrpathId a_side = on_x ? s.ax_side : s.ay_side;
        const UrpathId b_side = on_x ? s.bx_side : s.by_side;
        const UrpathId side = t == Onto::kASide ? a_side : b_side;
        if (is_spoke) {  // elem: source vertex spoked onto the split urpath
          if (t == Onto::kPin)
            m.add_edge(elem, pin);
          else
            m.add_spoke(elem, side);
        } else {  // elem: the other urpath of a rung through the split urpath
          if (t == Onto::kPin)
            m.add_spoke(pin, s.urpath_map[elem]);
          else
            m.add_rung(s.urpath_map[elem], side);
        }
      };

      size_t slot = 0;
      for (VertexId v : spokes_x) place(true, tx[pick[slot++]], true, v);
      for (VertexId v : spokes_y) place(false, ty[pick[slot++]], true, v);
      for (UrpathId w : rungs_x) place(true, tx[pick[slot++]], false, w);
      for (UrpathId w : rungs_y) place(false, ty[pick[slot++]], false, w);

      for (const auto& [v, u] : h.spokes)
        if (u != ux && u != uy) m.add_spoke(v, s.urpath_map[u]);
      for (const auto& [p, q] : h.rungs)
        if (p != ux && p != uy && q != ux && q != uy)
          m.add_rung(s.urpath_map[p], s.urpath_map[q]);

      if (seen.insert(m.structure_key()).second) out.push_back(std::move(s));

      size_t i = pick.size();
      while (i > 0 && ++pick[i - 1] == slots[i - 1]->size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

Realization lift_realization(const Pathograph& h, const RungSplit& split, const Realization& r) {
  const int nh = h.vertex_count();
  Realization out;
  std::vector<VertexId> to_out(r.graph.vertex_count(), -1);
  for (VertexId v = 0; v < nh; ++v) to_out[v] = out.graph.add_vertex(h.vertex_names[v]);

  out.internals.resize(h.urpath_count());
  for (UrpathId u = 0; u < h.urpath_count(); ++u) {
    std::vector<VertexId> chain;  // member-realization vertex ids, left to right
    auto extend = [&](UrpathId member_urpath) {
      if (member_urpath < 0) return;
      const auto& seg = r.internals[member_urpath];
      chain.insert(chain.end(), seg.begin(), seg.end());
    };
    if (u == split.ux) {
      extend(split.ax_side);
      chain.push_back(split.cx);
      extend(split.bx_side);
    } else if (u == split.uy) {
      extend(split.ay_side);
      chain.push_back(split.cy);
      extend(split.by_side);
    } else {
      extend(split.urpath_map[u]);
    }
    for (size_t k = 0; k < chain.size(); ++k) {
      const std::string name = h.urpath_names[u] + "#" + std::to_string(k + 1);
      to_out[chain[k]] = out.graph.add_vertex(name);
      out.internals[u].push_back(to_out[chain[k]]);
    }
  }

  for (const auto& [a, b] : r.graph.edges) out.graph.add_edge(to_out[a], to_out[b]);
  return out;
}

// --- closure of a family --------------------------------------------------------

namespace {

struct Addition {
  int kind;  // 0 edge, 1 spoke, 2 rung
  int a, b;
};

std::vector<Addition> legal_additions(const Pathograph& p) {
  std::vector<Addition> out;
  const int nv = p.vertex_count(), nu = p.urpath_count();
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      if (p.has_edge(a, b)) continue;
      bool spans = false;  // adding the edge would join the endpoints of an urpath
      for (int u = 0; u < nu && !spans; ++u)
        spans = p.urpath_ends[u] == std::pair<VertexId, VertexId>{a, b} ||
                p.urpath_ends[u] == std::pair<VertexId, VertexId>{b, a};
      if (!spans) out.push_back({0, a, b});
    }
  for (int v = 0; v < nv; ++v)
    for (int u = 0; u < nu; ++u)
      if (!p.has_spoke(v, u) && !p.is_endpoint_of(v, u)) out.push_back({1, v, u});
  for (int a = 0; a < nu; ++a)
    for (int b = a + 1; b < nu; ++b)
      if (!p.has_rung(a, b)) out.push_back({2, a, b});
  return out;
}

}  // namespace

ClosednessReport is_closed(const std::vector<Pathograph>& family) {
  for (size_t fi = 0; fi < family.size(); ++fi) {
    const Pathograph& f = family[fi];
    for (const Addition& add : legal_additions(f)) {
      Pathograph g = f;
      std::string desc;
      if (add.kind == 0) {
        g.add_edge(add.a, add.b);
        desc = "edge " + f.vertex_names[add.a] + " " + f.vertex_names[add.b];
      } else if (add.kind == 1) {
        g.add_spoke(add.a, add.b);
        desc = "spoke " + f.vertex_names[add.a] + " " + f.urpath_names[add.b];
      } else {
        g.add_rung(add.a, add.b);
        desc = "rung " + f.urpath_names[add.a] + " " + f.urpath_names[add.b];
      }
      bool covered = false;
      for (const Pathograph& m : family)
        if (contains(g, m)) {
          covered = true;
          break;
        }
      if (!covered) return {false, static_cast<int>(fi), desc};
    }
  }
  return {};
}

// --- the decision ----------------------------------------------------------------

namespace {

bool decide_rec(const Pathograph& h, const std::vector<Pathograph>& family,
                std::map<std::string, bool>& memo) {
  const std::string key = canonical_key(h);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ans = false;
  if (h.rungs.empty()) {
    ans = !is_empty(build_decision_dfa(h, family)).empty;
  } else {
    for (const RungSplit& s : eliminate_rung(h, *h.rungs.begin()))
      if (decide_rec(s.member, family, memo)) {
        ans = true;
        break;
      }
  }
  memo.emplace(key, ans);
  return ans;
}

std::optional<Realization> witness_rec(const Pathograph& h, const std::vector<Pathograph>& family,
                                       std::map<std::string, bool>& memo) {
  if (h.rungs.empty()) {
    const Emptiness e = is_empty(build_decision_dfa(h, family));
    if (e.empty) return std::nullopt;
    const Alphabet ab = alphabet(h);
    DetString s;
    for (int sym : e.witness) s.push_back(symbol_of(ab, sym));
    std::string why;
    auto r = realization_from_string(h, s, &why);
    if (!r) throw std::logic_error("closed witness: accepted string is not a realization: " + why);
    return r;
  }
  for (const RungSplit& s : eliminate_rung(h, *h.rungs.begin())) {
    if (!decide_rec(s.member, family, memo)) continue;  // prune dead branches cheaply
    if (auto w = witness_rec(s.member, family, memo)) return lift_realization(h, s, *w);
  }
  return std::nullopt;
}

void require_closed(const std::vector<Pathograph>& family) {
  const ClosednessReport rep = is_closed(family);
  if (!rep.closed)
    throw std::invalid_argument("family is not closed: member " + std::to_string(rep.member) +
                                " plus " + rep.addition + " escapes the family");
}

}  // namespace

bool decide_closed(const Pathograph& h, const std::vector<Pathograph>& family) {
  if (family.empty()) return true;  // every pathograph has a realization
  require_closed(family);
  std::map<std::string, bool> memo;
  return decide_rec(h, family, memo);
}

std::optional<Realization> closed_witness(const Pathograph& h,
                                          const std::vector<Pathograph>& family) {
  if (!family.empty()) require_closed(family);
  std::map<std::string, bool> memo;
  return witness_rec(h, family, memo);
}

}  // namespace pg
