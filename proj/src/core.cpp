#include "pathograph/core.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

namespace pg {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

VertexId Pathograph::add_vertex(const std::string& name) {
  vertex_names.push_back(name);
  return static_cast<VertexId>(vertex_names.size()) - 1;
}

UrpathId Pathograph::add_urpath(const std::string& name, VertexId left, VertexId right) {
  urpath_names.push_back(name);
  urpath_ends.emplace_back(left, right);
  return static_cast<UrpathId>(urpath_names.size()) - 1;
}

void Pathograph::add_edge(VertexId a, VertexId b) { edges.insert(ordered(a, b)); }
void Pathograph::add_spoke(VertexId v, UrpathId u) { spokes.insert({v, u}); }
void Pathograph::add_rung(UrpathId a, UrpathId b) { rungs.insert(ordered(a, b)); }

bool Pathograph::has_edge(VertexId a, VertexId b) const { return edges.count(ordered(a, b)) > 0; }
bool Pathograph::has_spoke(VertexId v, UrpathId u) const { return spokes.count({v, u}) > 0; }
bool Pathograph::has_rung(UrpathId a, UrpathId b) const { return rungs.count(ordered(a, b)) > 0; }

bool Pathograph::is_endpoint_of(VertexId v, UrpathId u) const {
  return urpath_ends[u].first == v || urpath_ends[u].second == v;
}

int Pathograph::find_vertex(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertex_names[i] == name) return i;
  return -1;
}

int Pathograph::find_urpath(const std::string& name) const {
  for (int i = 0; i < urpath_count(); ++i)
    if (urpath_names[i] == name) return i;
  return -1;
}

std::vector<VertexId> Pathograph::edge_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& e : edges) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Pathograph::same_structure(const Pathograph& o) const {
  return vertex_count() == o.vertex_count() && urpath_ends == o.urpath_ends && edges == o.edges &&
         spokes == o.spokes && rungs == o.rungs;
}

std::string Pathograph::structure_key() const {
  std::ostringstream os;
  os << vertex_count() << '|' << urpath_count() << '|';
  for (const auto& [a, b] : urpath_ends) os << a << ',' << b << ';';
  os << '|';
  for (const auto& [a, b] : edges) os << a << ',' << b << ';';
  os << '|';
  for (const auto& [v, u] : spokes) os << v << ',' << u << ';';
  os << '|';
  for (const auto& [a, b] : rungs) os << a << ',' << b << ';';
  return os.str();
}

// --- PathSub -----------------------------------------------------------------

bool PathSub::has_endpoints(VertexId a, VertexId b) const {
  return (front() == a && back() == b) || (front() == b && back() == a);
}

std::vector<VertexId> PathSub::interior_verts() const {
  if (verts.size() <= 2) return {};
  return std::vector<VertexId>(verts.begin() + 1, verts.end() - 1);
}

std::set<UrpathId> PathSub::urpath_set() const {
  std::set<UrpathId> out;
  for (const auto& c : conns)
    if (c.is_urpath) out.insert(c.urpath);
  return out;
}

std::set<VertexId> PathSub::vert_set() const { return {verts.begin(), verts.end()}; }

PathSub PathSub::reversed() const {
  PathSub out;
  out.verts.assign(verts.rbegin(), verts.rend());
  out.conns.assign(conns.rbegin(), conns.rend());
  return out;
}

std::string PathSub::key() const {
  auto encode = [](const PathSub& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.verts.size(); ++i) {
      os << 'v' << p.verts[i];
      if (i < p.conns.size()) {
        if (p.conns[i].is_urpath)
          os << 'u' << p.conns[i].urpath;
        else
          os << 'e';
      }
    }
    return os.str();
  };
  std::string a = encode(*this), b = encode(reversed());
  return a < b ? a : b;
}

// --- validate ----------------------------------------------------------------

std::vector<std::string> validate(const Pathograph& p) {
  std::vector<std::string> out;
  const int n = p.vertex_count(), k = p.urpath_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.vertex_names[i] == p.vertex_names[j])
        out.push_back("duplicate vertex name: " + p.vertex_names[i]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (p.urpath_names[i] == p.urpath_names[j])
        out.push_back("duplicate urpath name: " + p.urpath_names[i]);
  for (const auto& [a, b] : p.edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      out.push_back("edge endpoint out of range");
    else if (a == b)
      out.push_back("self-loop edge at vertex " + p.vertex_names[a]);
  }
  for (int u = 0; u < k; ++u) {
    auto [a, b] = p.urpath_ends[u];
    if (a < 0 || a >= n || b < 0 || b >= n) {
      out.push_back("urpath " + p.urpath_names[u] + " has an endpoint out of range");
      continue;
    }
    if (a == b) out.push_back("urpath " + p.urpath_names[u] + " has identical endpoints");
    if (p.has_edge(a, b))
      out.push_back("urpath " + p.urpath_names[u] + " has adjacent endpoints " + p.vertex_names[a] +
                    " and " + p.vertex_names[b]);
  }
  for (const auto& [v, u] : p.spokes) {
    if (v < 0 || v >= n || u < 0 || u >= k) {
      out.push_back("spoke endpoint out of range");
      continue;
    }
    if (p.is_endpoint_of(v, u))
      out.push_back("spoke from " + p.vertex_names[v] + " to its own urpath " + p.urpath_names[u]);
  }
  for (const auto& [a, b] : p.rungs) {
    if (a < 0 || a >= k || b < 0 || b >= k)
      out.push_back("rung endpoint out of range");
    else if (a == b)
      out.push_back("rung joining an urpath to itself: " + p.urpath_names[a]);
  }
  return out;
}

// --- subpathograph / connectivity ---------------------------------------------

Pathograph subpathograph(const Pathograph& p, const std::set<VertexId>& del_v,
                         const std::set<UrpathId>& del_u) {
  std::set<UrpathId> dead_u = del_u;
  for (int u = 0; u < p.urpath_count(); ++u) {
    auto [a, b] = p.urpath_ends[u];
    if (del_v.count(a) || del_v.count(b)) dead_u.insert(u);
  }
  Pathograph out;
  std::vector<int> vmap(p.vertex_count(), -1), umap(p.urpath_count(), -1);
  for (int v = 0; v < p.vertex_count(); ++v)
    if (!del_v.count(v)) vmap[v] = out.add_vertex(p.vertex_names[v]);
  for (int u = 0; u < p.urpath_count(); ++u)
    if (!dead_u.count(u))
      umap[u] = out.add_urpath(p.urpath_names[u], vmap[p.urpath_ends[u].first],
                               vmap[p.urpath_ends[u].second]);
  for (const auto& [a, b] : p.edges)
    if (vmap[a] >= 0 && vmap[b] >= 0) out.add_edge(vmap[a], vmap[b]);
  for (const auto& [v, u] : p.spokes)
    if (vmap[v] >= 0 && umap[u] >= 0) out.add_spoke(vmap[v], umap[u]);
  for (const auto& [a, b] : p.rungs)
    if (umap[a] >= 0 && umap[b] >= 0) out.add_rung(umap[a], umap[b]);
  return out;
}

bool is_connected(const Pathograph& p) {
  const int n = p.vertex_count(), k = p.urpath_count();
  if (n == 0) return false;
  std::vector<int> parent(n + k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& [a, b] : p.edges) unite(a, b);
  for (int u = 0; u < k; ++u) {
    unite(n + u, p.urpath_ends[u].first);
    unite(n + u, p.urpath_ends[u].second);
  }
  for (const auto& [v, u] : p.spokes) unite(v, n + u);
  for (const auto& [a, b] : p.rungs) unite(n + a, n + b);
  int root = find(0);
  for (int i = 1; i < n + k; ++i)
    if (find(i) != root) return false;
  return true;
}

// --- paths ---------------------------------------------------------------------

bool is_valid_path(const Pathograph& p, const PathSub& path) {
  const auto& vs = path.verts;
  if (vs.empty()) return false;
  if (path.conns.size() + 1 != vs.size()) return false;
  std::set<VertexId> seen;
  for (VertexId v : vs) {
    if (v < 0 || v >= p.vertex_count()) return false;
    if (!seen.insert(v).second) return false;
  }
  std::set<UrpathId> used_u;
  for (size_t i = 0; i < path.conns.size(); ++i) {
    const auto& c = path.conns[i];
    if (c.is_urpath) {
      if (c.urpath < 0 || c.urpath >= p.urpath_count()) return false;
      auto [a, b] = p.urpath_ends[c.urpath];
      if (!((a == vs[i] && b == vs[i + 1]) || (a == vs[i + 1] && b == vs[i]))) return false;
      if (!used_u.insert(c.urpath).second) return false;
    } else {
      if (!p.has_edge(vs[i], vs[i + 1])) return false;
    }
  }
  // Chordless: no edge between non-consecutive path vertices.
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 2; j < vs.size(); ++j)
      if (p.has_edge(vs[i], vs[j])) return false;
  // Consecutive vertices joined by an urpath connector must not also carry an
  // edge; a well-formed pathograph guarantees this, but candidate paths may be
  // checked against arbitrary inputs.
  for (size_t i = 0; i < path.conns.size(); ++i)
    if (path.conns[i].is_urpath && p.has_edge(vs[i], vs[i + 1])) return false;
  // No spokes between a path vertex and a path urpath, no rungs inside.
  for (UrpathId u : used_u)
    for (VertexId v : vs)
      if (p.has_spoke(v, u)) return false;
  for (UrpathId a : used_u)
    for (UrpathId b : used_u)
      if (a < b && p.has_rung(a, b)) return false;
  return true;
}

namespace {

// Shared DFS extension machinery for path enumeration.
// on_path(path) is called for every valid path discovered (in growth order).
void grow_paths(const Pathograph& p, PathSub& cur, std::set<VertexId>& used_v,
                std::set<UrpathId>& used_u, const std::function<void(const PathSub&)>& on_path) {
  on_path(cur);
  VertexId tail = cur.back();
  // Candidate continuations: edges and urpaths from tail to unused vertices.
  for (int w = 0; w < p.vertex_count(); ++w) {
    if (used_v.count(w)) continue;
    // Chord screen: w may touch only the current tail among used vertices.
    bool chord = false;
    for (VertexId v : cur.verts)
      if (v != tail && p.has_edge(v, w)) {
        chord = true;
        break;
      }
    if (chord) continue;
    std::vector<PathConn> conns;
    if (p.has_edge(tail, w)) conns.push_back(PathConn{false, -1});
    for (int u = 0; u < p.urpath_count(); ++u) {
      if (used_u.count(u)) continue;
      auto [a, b] = p.urpath_ends[u];
      if ((a == tail && b == w) || (a == w && b == tail)) conns.push_back(PathConn{true, u});
    }
    for (const auto& c : conns) {
      if (c.is_urpath) {
        // New urpath connector: must have no spoke to any used vertex and no
        // rung to any used urpath.
        bool bad = false;
        for (VertexId v : cur.verts)
          if (p.has_spoke(v, c.urpath)) {
            bad = true;
            break;
          }
        if (!bad && p.has_spoke(w, c.urpath)) bad = true;
        if (!bad)
          for (UrpathId u2 : used_u)
            if (p.has_rung(u2, c.urpath)) {
              bad = true;
              break;
            }
        if (bad) continue;
      }
      // New vertex w: no spoke from w to any used urpath.
      bool bad = false;
      for (UrpathId u2 : used_u)
        if (p.has_spoke(w, u2)) {
          bad = true;
          break;
        }
      if (c.is_urpath && p.has_spoke(w, c.urpath)) bad = true;
      if (bad) continue;
      cur.verts.push_back(w);
      cur.conns.push_back(c);
      used_v.insert(w);
      if (c.is_urpath) used_u.insert(c.urpath);
      grow_paths(p, cur, used_v, used_u, on_path);
      if (c.is_urpath) used_u.erase(c.urpath);
      used_v.erase(w);
      cur.conns.pop_back();
      cur.verts.pop_back();
    }
  }
}

}  // namespace

std::vector<PathSub> enumerate_paths(const Pathograph& p) {
  std::vector<PathSub> out;
  std::set<std::string> seen;
  for (int v = 0; v < p.vertex_count(); ++v) {
    PathSub cur;
    cur.verts.push_back(v);
    std::set<VertexId> used_v{v};
    std::set<UrpathId> used_u;
    grow_paths(p, cur, used_v, used_u, [&](const PathSub& path) {
      std::string key = path.key();
      if (seen.insert(key).second) out.push_back(path);
    });
  }
  std::sort(out.begin(), out.end(), [](const PathSub& a, const PathSub& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    return a.key() < b.key();
  });
  return out;
}

// --- image adjacency -------------------------------------------------------------

bool elements_adjacent(const Pathograph& p, bool a_is_urpath, int a, bool b_is_urpath, int b) {
  if (!a_is_urpath && !b_is_urpath) return p.has_edge(a, b);
  if (a_is_urpath && b_is_urpath) return p.has_rung(a, b);
  if (a_is_urpath) return p.has_spoke(b, a);
  return p.has_spoke(a, b);
}

bool image_adjacent_vv(const Pathograph& g, VertexId a, VertexId b) { return g.has_edge(a, b); }

bool image_adjacent_vp(const Pathograph& g, VertexId v, const PathSub& path) {
  for (VertexId w : path.interior_verts())
    if (g.has_edge(v, w)) return true;
  for (UrpathId u : path.urpath_set())
    if (g.has_spoke(v, u)) return true;
  return false;
}

bool image_adjacent_pp(const Pathograph& g, const PathSub& a, const PathSub& b) {
  auto ia = a.interior_verts();
  auto ib = b.interior_verts();
  auto ua = a.urpath_set();
  auto ub = b.urpath_set();
  for (VertexId x : ia)
    for (VertexId y : ib)
      if (g.has_edge(x, y)) return true;
  for (VertexId x : ia)
    for (UrpathId u : ub)
      if (g.has_spoke(x, u)) return true;
  for (VertexId y : ib)
    for (UrpathId u : ua)
      if (g.has_spoke(y, u)) return true;
  for (UrpathId u : ua)
    for (UrpathId w : ub)
      if (g.has_rung(u, w)) return true;
  return false;
}

// --- inclusions -----------------------------------------------------------------

namespace {

// Pairwise compatibility of two image paths: interiors meet nothing of the
// other path, and no urpath connector is shared.
bool paths_internally_disjoint(const PathSub& a, const PathSub& b) {
  auto ua = a.urpath_set(), ub = b.urpath_set();
  for (UrpathId u : ua)
    if (ub.count(u)) return false;
  auto bverts = b.vert_set();
  for (VertexId v : a.interior_verts())
    if (bverts.count(v)) return false;
  auto averts = a.vert_set();
  for (VertexId v : b.interior_verts())
    if (averts.count(v)) return false;
  return true;
}

// All paths of g between fixed distinct endpoints, deterministic order.
std::vector<PathSub> paths_between(const Pathograph& g, VertexId from, VertexId to) {
  std::vector<PathSub> out;
  PathSub cur;
  cur.verts.push_back(from);
  std::set<VertexId> used_v{from};
  std::set<UrpathId> used_u;
  grow_paths(g, cur, used_v, used_u, [&](const PathSub& path) {
    if (path.back() == to && path.verts.size() >= 2) out.push_back(path);
  });
  std::sort(out.begin(), out.end(), [](const PathSub& a, const PathSub& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    return a.key() < b.key();
  });
  return out;
}

struct InclusionSearch {
  const Pathograph& f;
  const Pathograph& g;
  std::vector<VertexId> vmap;
  std::vector<char> g_used;
  std::vector<PathSub> umap;
  std::vector<int> vorder;

  InclusionSearch(const Pathograph& f_, const Pathograph& g_)
      : f(f_), g(g_), vmap(f_.vertex_count(), -1), g_used(g_.vertex_count(), 0) {
    vorder.resize(f.vertex_count());
    std::iota(vorder.begin(), vorder.end(), 0);
    std::vector<int> deg(f.vertex_count(), 0);
    for (const auto& [a, b] : f.edges) {
      deg[a]++;
      deg[b]++;
    }
    for (const auto& [v, u] : f.spokes) deg[v]++;
    for (const auto& [a, b] : f.urpath_ends) {
      deg[a]++;
      deg[b]++;
    }
    std::stable_sort(vorder.begin(), vorder.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  }

  bool vertex_ok(int fv, int gv) {
    for (int w = 0; w < f.vertex_count(); ++w) {
      if (vmap[w] < 0 || w == fv) continue;
      if (f.has_edge(fv, w) != g.has_edge(gv, vmap[w])) return false;
    }
    return true;
  }

  bool path_ok(UrpathId fu, const PathSub& cand, int assigned_upto) {
    if (cand.urpath_set().empty() && cand.verts.size() < 3) return false;
    // Interior vertices may not collide with mapped vertices.
    for (VertexId v : cand.interior_verts())
      if (g_used[v]) return false;
    for (int u2 = 0; u2 < assigned_upto; ++u2)
      if (!paths_internally_disjoint(cand, umap[u2])) return false;
    // Adjacency equivalence against every mapped vertex (endpoints exempt).
    for (int w = 0; w < f.vertex_count(); ++w) {
      if (vmap[w] < 0) continue;
      if (f.is_endpoint_of(w, fu)) continue;
      bool want = f.has_spoke(w, fu);
      if (image_adjacent_vp(g, vmap[w], cand) != want) return false;
    }
    for (int u2 = 0; u2 < assigned_upto; ++u2) {
      bool want = f.has_rung(fu, u2);
      if (image_adjacent_pp(g, cand, umap[u2]) != want) return false;
    }
    return true;
  }

  bool assign_urpaths(int u) {
    if (u == f.urpath_count()) return true;
    auto [a, b] = f.urpath_ends[u];
    for (const PathSub& cand : paths_between(g, vmap[a], vmap[b])) {
      if (!path_ok(u, cand, u)) continue;
      umap.push_back(cand);
      if (assign_urpaths(u + 1)) return true;
      umap.pop_back();
    }
    return false;
  }

  bool assign_vertices(size_t idx) {
    if (idx == vorder.size()) {
      umap.clear();
      return assign_urpaths(0);
    }
    int fv = vorder[idx];
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
      if (g_used[gv]) continue;
      if (!vertex_ok(fv, gv)) continue;
      vmap[fv] = gv;
      g_used[gv] = 1;
      if (assign_vertices(idx + 1)) return true;
      g_used[gv] = 0;
      vmap[fv] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Inclusion> find_inclusion(const Pathograph& f, const Pathograph& g) {
  if (f.vertex_count() > g.vertex_count()) return std::nullopt;
  InclusionSearch s(f, g);
  if (!s.assign_vertices(0)) return std::nullopt;
  Inclusion out;
  out.vmap = s.vmap;
  out.umap = s.umap;
  return out;
}

bool check_inclusion(const Pathograph& f, const Pathograph& g, const Inclusion& inc) {
  if (static_cast<int>(inc.vmap.size()) != f.vertex_count()) return false;
  if (static_cast<int>(inc.umap.size()) != f.urpath_count()) return false;
  std::set<VertexId> image;
  for (VertexId v : inc.vmap) {
    if (v < 0 || v >= g.vertex_count()) return false;
    if (!image.insert(v).second) return false;
  }
  for (int u = 0; u < f.urpath_count(); ++u) {
    const PathSub& path = inc.umap[u];
    if (!is_valid_path(g, path)) return false;
    auto [a, b] = f.urpath_ends[u];
    if (!path.has_endpoints(inc.vmap[a], inc.vmap[b])) return false;
    if (path.urpath_set().empty() && path.verts.size() < 3) return false;
    for (VertexId v : path.interior_verts())
      if (image.count(v)) return false;
  }
  for (int u = 0; u < f.urpath_count(); ++u)
    for (int w = u + 1; w < f.urpath_count(); ++w)
      if (!paths_internally_disjoint(inc.umap[u], inc.umap[w])) return false;
  for (int v = 0; v < f.vertex_count(); ++v)
    for (int w = v + 1; w < f.vertex_count(); ++w)
      if (f.has_edge(v, w) != g.has_edge(inc.vmap[v], inc.vmap[w])) return false;
  for (int v = 0; v < f.vertex_count(); ++v)
    for (int u = 0; u < f.urpath_count(); ++u) {
      if (f.is_endpoint_of(v, u)) continue;
      if (f.has_spoke(v, u) != image_adjacent_vp(g, inc.vmap[v], inc.umap[u])) return false;
    }
  for (int u = 0; u < f.urpath_count(); ++u)
    for (int w = u + 1; w < f.urpath_count(); ++w)
      if (f.has_rung(u, w) != image_adjacent_pp(g, inc.umap[u], inc.umap[w])) return false;
  return true;
}

bool contains(const Pathograph& g, const Pathograph& f) { return find_inclusion(f, g).has_value(); }

Inclusion compose(const Pathograph& a, const Pathograph& /*b*/, const Pathograph& /*c*/,
                  const Inclusion& phi, const Inclusion& psi) {
  Inclusion out;
  out.vmap.resize(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) out.vmap[v] = psi.vmap[phi.vmap[v]];
  out.umap.resize(a.urpath_count());
  for (int u = 0; u < a.urpath_count(); ++u) {
    const PathSub& mid = phi.umap[u];
    PathSub res;
    res.verts.push_back(psi.vmap[mid.verts[0]]);
    for (size_t i = 0; i < mid.conns.size(); ++i) {
      VertexId nxt = psi.vmap[mid.verts[i + 1]];
      if (!mid.conns[i].is_urpath) {
        res.conns.push_back(PathConn{false, -1});
        res.verts.push_back(nxt);
      } else {
        PathSub piece = psi.umap[mid.conns[i].urpath];
        if (piece.front() != res.back()) piece = piece.reversed();
        for (size_t j = 0; j < piece.conns.size(); ++j) {
          res.conns.push_back(piece.conns[j]);
          res.verts.push_back(piece.verts[j + 1]);
        }
        (void)nxt;
      }
    }
    out.umap[u] = res;
  }
  return out;
}

// --- isomorphism ------------------------------------------------------------------

namespace {

struct IsoSearch {
  const Pathograph& p;
  const Pathograph& q;
  std::vector<int> vmap;
  std::vector<char> used;

  IsoSearch(const Pathograph& p_, const Pathograph& q_)
      : p(p_), q(q_), vmap(p_.vertex_count(), -1), used(q_.vertex_count(), 0) {}

  bool urpaths_match() {
    const int k = p.urpath_count();
    std::vector<int> um(k, -1);
    std::vector<char> uused(k, 0);
    std::function<bool(int)> rec = [&](int u) -> bool {
      if (u == k) {
        // Sizes were compared upfront, so forward preservation is enough.
        for (const auto& [v, w] : p.spokes)
          if (!q.has_spoke(vmap[v], um[w])) return false;
        for (const auto& [x, y] : p.rungs)
          if (!q.has_rung(um[x], um[y])) return false;
        return true;
      }
      auto [a, b] = p.urpath_ends[u];
      for (int t = 0; t < k; ++t) {
        if (uused[t]) continue;
        auto [c, d] = q.urpath_ends[t];
        if (!((vmap[a] == c && vmap[b] == d) || (vmap[a] == d && vmap[b] == c))) continue;
        um[u] = t;
        uused[t] = 1;
        if (rec(u + 1)) return true;
        uused[t] = 0;
        um[u] = -1;
      }
      return false;
    };
    return rec(0);
  }

  bool rec(int v) {
    if (v == p.vertex_count()) return urpaths_match();
    for (int w = 0; w < q.vertex_count(); ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int x = 0; x < v; ++x)
        if (p.has_edge(v, x) != q.has_edge(w, vmap[x])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      vmap[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
      vmap[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const Pathograph& p, const Pathograph& q) {
  if (p.vertex_count() != q.vertex_count() || p.urpath_count() != q.urpath_count()) return false;
  if (p.edges.size() != q.edges.size() || p.spokes.size() != q.spokes.size() ||
      p.rungs.size() != q.rungs.size())
    return false;
  IsoSearch s(p, q);
  return s.rec(0);
}

namespace {

std::string encode_under(const Pathograph& p, const std::vector<int>& vperm,
                         const std::vector<int>& uperm) {
  // vperm[v] = new id of vertex v; uperm[u] = new id of urpath u.
  std::vector<std::pair<int, int>> ends(p.urpath_count());
  for (int u = 0; u < p.urpath_count(); ++u) {
    auto [a, b] = p.urpath_ends[u];
    int x = vperm[a], y = vperm[b];
    ends[uperm[u]] = {std::min(x, y), std::max(x, y)};
  }
  std::vector<std::pair<int, int>> es, sp, ru;
  for (const auto& [a, b] : p.edges) {
    int x = vperm[a], y = vperm[b];
    es.push_back({std::min(x, y), std::max(x, y)});
  }
  for (const auto& [v, u] : p.spokes) sp.push_back({vperm[v], uperm[u]});
  for (const auto& [a, b] : p.rungs) {
    int x = uperm[a], y = uperm[b];
    ru.push_back({std::min(x, y), std::max(x, y)});
  }
  std::sort(es.begin(), es.end());
  std::sort(sp.begin(), sp.end());
  std::sort(ru.begin(), ru.end());
  std::ostringstream os;
  os << p.vertex_count() << ':' << p.urpath_count() << ':';
  for (const auto& [a, b] : ends) os << a << ',' << b << ';';
  os << ':';
  for (const auto& [a, b] : es) os << a << ',' << b << ';';
  os << ':';
  for (const auto& [a, b] : sp) os << a << ',' << b << ';';
  os << ':';
  for (const auto& [a, b] : ru) os << a << ',' << b << ';';
  return os.str();
}

}  // namespace

std::string canonical_key(const Pathograph& p) {
  const int n = p.vertex_count(), k = p.urpath_count();
  if (n == 0) return "0:0";
  // Invariant-bucketed vertex permutations: only orderings that sort vertices
  // by an isomorphism-invariant signature are explored.
  std::vector<std::string> sig(n);
  for (int v = 0; v < n; ++v) {
    int deg = 0, ends = 0, spk = 0;
    for (const auto& [a, b] : p.edges)
      if (a == v || b == v) deg++;
    for (const auto& [a, b] : p.urpath_ends)
      if (a == v || b == v) ends++;
    for (const auto& [w, u] : p.spokes) {
      (void)u;
      if (w == v) spk++;
    }
    std::ostringstream os;
    os << deg << ',' << ends << ',' << spk;
    sig[v] = os.str();
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sig[a] < sig[b] || (sig[a] == sig[b] && a < b); });
  // Bucket boundaries.
  std::vector<std::pair<int, int>> buckets;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && sig[order[j]] == sig[order[i]]) j++;
    buckets.push_back({i, j});
    i = j;
  }
  std::string best;
  std::vector<int> vperm(n, -1);
  std::function<void(size_t)> try_buckets = [&](size_t bi) {
    if (bi == buckets.size()) {
      // All vertex ids fixed; derive urpath orderings.
      std::vector<int> uorder(k);
      std::iota(uorder.begin(), uorder.end(), 0);
      std::vector<std::pair<int, int>> uends(k);
      for (int u = 0; u < k; ++u) {
        auto [a, b] = p.urpath_ends[u];
        uends[u] = {std::min(vperm[a], vperm[b]), std::max(vperm[a], vperm[b])};
      }
      std::sort(uorder.begin(), uorder.end(), [&](int a, int b) { return uends[a] < uends[b]; });
      // Permute within tie groups of identical mapped endpoints.
      std::vector<std::pair<int, int>> ugroups;
      for (int i = 0; i < k;) {
        int j = i;
        while (j < k && uends[uorder[j]] == uends[uorder[i]]) j++;
        ugroups.push_back({i, j});
        i = j;
      }
      std::vector<int> uperm(k, -1);
      std::function<void(size_t)> try_ugroups = [&](size_t gi) {
        if (gi == ugroups.size()) {
          std::string enc = encode_under(p, vperm, uperm);
          if (best.empty() || enc < best) best = enc;
          return;
        }
        auto [lo, hi] = ugroups[gi];
        std::vector<int> slice(uorder.begin() + lo, uorder.begin() + hi);
        std::sort(slice.begin(), slice.end());
        do {
          for (int t = lo; t < hi; ++t) uperm[slice[t - lo]] = t;
          try_ugroups(gi + 1);
        } while (std::next_permutation(slice.begin(), slice.end()));
      };
      try_ugroups(0);
      return;
    }
    auto [lo, hi] = buckets[bi];
    std::vector<int> slice(order.begin() + lo, order.begin() + hi);
    std::sort(slice.begin(), slice.end());
    do {
      for (int t = lo; t < hi; ++t) vperm[slice[t - lo]] = t;
      try_buckets(bi + 1);
    } while (std::next_permutation(slice.begin(), slice.end()));
  };
  try_buckets(0);
  return best;
}

}  // namespace pg
