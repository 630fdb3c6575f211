#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pathograph/automaton.hpp"

namespace pg {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

uint32_t bit(int v) { return 1u << v; }

/** Call fn(W) for every mask W with lo ⊆ W ⊆ hi. */
template <typename Fn>
void for_each_mask_between(uint32_t lo, uint32_t hi, Fn fn) {
  uint32_t extra = hi & ~lo;
  uint32_t sub = extra;
  for (;;) {
    fn(lo | sub);
    if (sub == 0) break;
    sub = (sub - 1) & extra;
  }
}

}  // namespace

// --- partial inclusions ---------------------------------------------------------

bool PartialInclusion::completed(const Pathograph& f, int u) const {
  if (!fragmap[u]) return false;
  const auto& frs = *fragmap[u];
  if (frs.size() != 1) return false;
  auto [va, vb] = f.urpath_ends[u];
  if (vmap[va] < 0 || vmap[vb] < 0) return false;
  return frs[0].has_endpoints(vmap[va], vmap[vb]);
}

namespace {

struct FragOption {
  bool undetermined = false;
  std::vector<int> paths;  // indices into the shared path list, ascending
};

}  // namespace

std::vector<PartialInclusion> enumerate_partial_inclusions(const Pathograph& f,
                                                           const Pathograph& H) {
  if (!H.is_graph())
    throw std::invalid_argument("partial inclusions: the determined part must be a plain graph");
  const int nf = f.vertex_count();
  const int nu = f.urpath_count();
  const int nH = H.vertex_count();
  if (nH > 25) throw std::runtime_error("partial inclusions: determined part too large");

  const std::vector<PathSub> paths = enumerate_paths(H);
  const int np = static_cast<int>(paths.size());
  std::vector<std::set<VertexId>> pverts(np);
  for (int i = 0; i < np; ++i) pverts[i] = paths[i].vert_set();

  // Two paths may appear as segments of one urpath image only if they are
  // vertex-disjoint and carry no edge between them (any such edge would be a
  // chord of the final induced path).
  std::vector<std::vector<char>> compat(np, std::vector<char>(np, 0));
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      bool ok = true;
      for (VertexId a : pverts[i]) {
        if (pverts[j].count(a)) ok = false;
        if (!ok) break;
        for (VertexId b : pverts[j])
          if (H.has_edge(a, b)) {
            ok = false;
            break;
          }
      }
      compat[i][j] = compat[j][i] = ok ? 1 : 0;
    }

  std::vector<PartialInclusion> out;
  std::vector<int> vmap(nf, -1);
  std::vector<char> used(nH, 0);

  // Segment-set choices for one urpath, given the images of its endpoints.
  auto frag_options = [&](int A, int B) {
    std::vector<FragOption> opts;
    if (A < 0 && B < 0) opts.push_back({true, {}});

    std::vector<int> chosen;
    auto valid = [&]() {
      int pa = -1, pb = -1;  // containing paths of the anchored ends
      for (int idx : chosen) {
        if (A >= 0 && pverts[idx].count(A)) pa = idx;
        if (B >= 0 && pverts[idx].count(B)) pb = idx;
      }
      if (A >= 0) {
        if (pa < 0 || (paths[pa].front() != A && paths[pa].back() != A)) return false;
      }
      if (B >= 0) {
        if (pb < 0 || (paths[pb].front() != B && paths[pb].back() != B)) return false;
      }
      if (A >= 0 && B >= 0 && pa == pb) {
        // Both ends determined on one segment: the segment is the whole image,
        // which needs at least one inner vertex.
        if (chosen.size() != 1 || paths[pa].vertex_count() < 3) return false;
      }
      return true;
    };
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int from) -> void {
      if (!chosen.empty() && valid()) opts.push_back({false, chosen});
      for (int idx = from; idx < np; ++idx) {
        bool ok = true;
        for (int c : chosen)
          if (!compat[c][idx]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(idx);
        self(self, idx + 1);
        chosen.pop_back();
      }
    };
    dfs(dfs, 0);
    return opts;
  };

  // Validation of one urpath option against the vertex map: image vertices on
  // segments may meet the mapped vertices only at the urpath's own anchored
  // ends, and a fully determined urpath must mirror spokes exactly.
  auto option_ok = [&](int u, const FragOption& opt) {
    if (opt.undetermined) return true;
    auto [va, vb] = f.urpath_ends[u];
    int A = vmap[va], B = vmap[vb];
    std::set<VertexId> fverts;
    for (int idx : opt.paths)
      for (VertexId x : pverts[idx]) fverts.insert(x);
    for (int w = 0; w < nf; ++w) {
      if (vmap[w] < 0) continue;
      if (!fverts.count(vmap[w])) continue;
      bool anchored = (w == va && A >= 0) || (w == vb && B >= 0);
      if (!anchored) return false;
    }
    // Fully determined urpath: spokes must hold exactly against inner vertices.
    bool completed = A >= 0 && B >= 0 && opt.paths.size() == 1 &&
                     paths[opt.paths[0]].has_endpoints(A, B);
    if (completed) {
      const PathSub& p = paths[opt.paths[0]];
      auto inner = p.interior_verts();
      for (int w = 0; w < nf; ++w) {
        if (vmap[w] < 0 || w == va || w == vb) continue;
        bool adj = false;
        for (VertexId x : inner)
          if (H.has_edge(vmap[w], x)) adj = true;
        if (adj != f.has_spoke(w, u)) return false;
      }
    }
    return true;
  };

  // Pairwise filters between urpath options.
  auto pair_ok = [&](int u1, const FragOption& o1, int u2, const FragOption& o2) {
    if (o1.undetermined || o2.undetermined) return true;
    auto ends1 = f.urpath_ends[u1];
    auto ends2 = f.urpath_ends[u2];
    std::set<VertexId> anch1, anch2;
    if (vmap[ends1.first] >= 0) anch1.insert(vmap[ends1.first]);
    if (vmap[ends1.second] >= 0) anch1.insert(vmap[ends1.second]);
    if (vmap[ends2.first] >= 0) anch2.insert(vmap[ends2.first]);
    if (vmap[ends2.second] >= 0) anch2.insert(vmap[ends2.second]);
    std::set<VertexId> v1, v2;
    for (int idx : o1.paths)
      for (VertexId x : pverts[idx]) v1.insert(x);
    for (int idx : o2.paths)
      for (VertexId x : pverts[idx]) v2.insert(x);
    for (VertexId x : v1)
      if (v2.count(x) && !(anch1.count(x) && anch2.count(x))) return false;

    bool c1 = vmap[ends1.first] >= 0 && vmap[ends1.second] >= 0 && o1.paths.size() == 1 &&
              paths[o1.paths[0]].has_endpoints(vmap[ends1.first], vmap[ends1.second]);
    bool c2 = vmap[ends2.first] >= 0 && vmap[ends2.second] >= 0 && o2.paths.size() == 1 &&
              paths[o2.paths[0]].has_endpoints(vmap[ends2.first], vmap[ends2.second]);
    if (c1 && c2) {
      auto i1 = paths[o1.paths[0]].interior_verts();
      auto i2 = paths[o2.paths[0]].interior_verts();
      bool adj = false;
      for (VertexId a : i1)
        for (VertexId b : i2)
          if (H.has_edge(a, b)) adj = true;
      if (adj != f.has_rung(u1, u2)) return false;
    }
    return true;
  };

  std::vector<std::vector<FragOption>> opts(nu);
  std::vector<int> pick(nu, 0);

  auto emit = [&]() {
    PartialInclusion phi;
    phi.vmap = vmap;
    phi.fragmap.resize(nu);
    for (int u = 0; u < nu; ++u) {
      const FragOption& o = opts[u][pick[u]];
      if (o.undetermined) continue;
      std::vector<PathSub> frs;
      for (int idx : o.paths) frs.push_back(paths[idx]);
      phi.fragmap[u] = std::move(frs);
    }
    out.push_back(std::move(phi));
  };

  auto urpath_dfs = [&](auto&& self, int u) -> void {
    if (u == nu) {
      emit();
      return;
    }
    for (size_t i = 0; i < opts[u].size(); ++i) {
      bool ok = true;
      for (int u2 = 0; u2 < u && ok; ++u2) ok = pair_ok(u2, opts[u2][pick[u2]], u, opts[u][i]);
      if (!ok) continue;
      pick[u] = static_cast<int>(i);
      self(self, u + 1);
    }
  };

  auto vertex_dfs = [&](auto&& self, int v) -> void {
    if (v == nf) {
      bool feasible = true;
      for (int u = 0; u < nu && feasible; ++u) {
        auto [va, vb] = f.urpath_ends[u];
        std::vector<FragOption> all = frag_options(vmap[va], vmap[vb]);
        opts[u].clear();
        for (const FragOption& o : all)
          if (option_ok(u, o)) opts[u].push_back(o);
        if (opts[u].empty()) feasible = false;
      }
      if (feasible) urpath_dfs(urpath_dfs, 0);
      return;
    }
    auto consistent = [&](int hv) {
      for (int w = 0; w < v; ++w) {
        if (vmap[w] < 0) continue;
        if (f.has_edge(v, w) != H.has_edge(hv, vmap[w])) return false;
      }
      return true;
    };
    vmap[v] = -1;
    self(self, v + 1);
    for (int hv = 0; hv < nH; ++hv) {
      if (used[hv] || !consistent(hv)) continue;
      vmap[v] = hv;
      used[hv] = 1;
      self(self, v + 1);
      used[hv] = 0;
      vmap[v] = -1;
    }
  };
  vertex_dfs(vertex_dfs, 0);
  return out;
}

PartialInclusion restrict_inclusion(const Pathograph& f, const Pathograph& H,
                                    const Inclusion& inc) {
  const int nH = H.vertex_count();
  PartialInclusion phi;
  phi.vmap.resize(f.vertex_count());
  for (int v = 0; v < f.vertex_count(); ++v)
    phi.vmap[v] = inc.vmap[v] < nH ? inc.vmap[v] : -1;
  phi.fragmap.resize(f.urpath_count());
  for (int u = 0; u < f.urpath_count(); ++u) {
    const PathSub& p = inc.umap[u];
    std::vector<PathSub> frs;
    PathSub cur;
    // Fragments are undirected; store each in the orientation that starts at
    // its smaller end, matching the canonical form the enumeration lists.
    auto flush = [&]() {
      cur.conns.resize(cur.verts.size() - 1);
      frs.push_back(cur.front() <= cur.back() ? std::move(cur) : cur.reversed());
      cur = PathSub{};
    };
    for (VertexId x : p.verts) {
      if (x < nH) {
        if (!cur.verts.empty()) cur.conns.push_back(PathConn{false, -1});
        cur.verts.push_back(x);
      } else if (!cur.verts.empty()) {
        flush();
      }
    }
    if (!cur.verts.empty()) flush();
    if (!frs.empty()) phi.fragmap[u] = std::move(frs);
  }
  return phi;
}

// --- search data ------------------------------------------------------------------

namespace {

struct AnchorSpec {
  bool is_h = false;
  int hv = -1;  // H-vertex when is_h
  int fv = -1;  // undetermined f-vertex otherwise
};

struct GapSpec {
  AnchorSpec entry, exit;
};

struct Arrangement {
  std::vector<GapSpec> gaps;
  std::vector<std::pair<int, uint32_t>> xreq;   // (f-vertex, required label bits)
  std::vector<std::pair<int, int>> xg_pairs;    // (f-vertex, gap position)
};

struct Candidate {
  bool is_pair = false;
  int a = -1, b = -1;   // object pair
  int obj = -1;         // single-object H requirement
  uint32_t hbit = 0;
};

std::string serialize_search_data(const SearchData& d) {
  std::ostringstream os;
  for (const SearchObject& o : d.objects) {
    os << (o.is_path ? 'p' : 'v') << o.place << ':' << o.req_mask << ':' << o.allow_mask << ':'
       << o.entry.is_h << ',' << o.entry.h_vertex << ',' << o.entry.obj << ':' << o.exit.is_h
       << ',' << o.exit.h_vertex << ',' << o.exit.obj << ';';
  }
  os << '|';
  for (auto& p : d.req_pairs) os << p.first << ',' << p.second << ';';
  os << '|';
  for (auto& p : d.allow_pairs) os << p.first << ',' << p.second << ';';
  os << '|';
  for (auto& line : d.order) {
    for (int y : line) os << y << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace

std::vector<SearchData> enumerate_search_data(const Pathograph& f, const Pathograph& h,
                                              const Pathograph& H, const PartialInclusion& phi) {
  const int nf = f.vertex_count();
  const int nu = f.urpath_count();
  const int nH = H.vertex_count();
  const int K = h.urpath_count();
  if (nH > 20) throw std::runtime_error("search data: determined part too large");
  require(static_cast<int>(phi.vmap.size()) == nf &&
              static_cast<int>(phi.fragmap.size()) == nu,
          "search data: malformed partial inclusion");

  std::vector<uint32_t> nbr(nH, 0);
  for (auto [a, b] : H.edges) {
    nbr[a] |= bit(b);
    nbr[b] |= bit(a);
  }
  auto adj_of = [&](uint32_t m) {
    uint32_t r = 0;
    for (int v = 0; v < nH; ++v)
      if (m & bit(v)) r |= nbr[v];
    return r;
  };

  uint32_t im_mask = 0;
  for (int v = 0; v < nf; ++v)
    if (phi.vmap[v] >= 0) im_mask |= bit(phi.vmap[v]);

  std::vector<char> comp(nu, 0);
  std::vector<uint32_t> frag_mask(nu, 0), anch_mask(nu, 0), sint_mask(nu, 0);
  for (int u = 0; u < nu; ++u) {
    comp[u] = phi.completed(f, u) ? 1 : 0;
    auto [va, vb] = f.urpath_ends[u];
    if (phi.vmap[va] >= 0) anch_mask[u] |= bit(phi.vmap[va]);
    if (phi.vmap[vb] >= 0) anch_mask[u] |= bit(phi.vmap[vb]);
    if (phi.fragmap[u])
      for (const PathSub& p : *phi.fragmap[u])
        for (VertexId x : p.verts) frag_mask[u] |= bit(x);
    sint_mask[u] = frag_mask[u] & ~anch_mask[u];
  }

  // Nonadjacency that inner segment vertices already violate can never be
  // repaired: no arrangement exists at all.
  for (int w = 0; w < nf; ++w) {
    if (phi.vmap[w] < 0) continue;
    for (int u = 0; u < nu; ++u) {
      if (f.is_endpoint_of(w, u) || comp[u]) continue;
      if (!f.has_spoke(w, u) && (nbr[phi.vmap[w]] & sint_mask[u])) return {};
    }
  }
  for (int u = 0; u < nu; ++u)
    for (int u2 = u + 1; u2 < nu; ++u2) {
      if (comp[u] && comp[u2]) continue;
      if (!f.has_rung(u, u2) && (adj_of(sint_mask[u]) & sint_mask[u2])) return {};
    }

  uint32_t all_frag = 0;
  for (int u = 0; u < nu; ++u) all_frag |= frag_mask[u];
  const uint32_t full = static_cast<uint32_t>((1ull << nH) - 1);
  const uint32_t free_mask = full & ~(im_mask | all_frag);

  // --- arrangements per urpath that still has undetermined pieces -------------

  auto arrangements_of = [&](int u) {
    std::vector<Arrangement> out;
    auto [va, vb] = f.urpath_ends[u];
    const int A = phi.vmap[va], B = phi.vmap[vb];
    if (!phi.fragmap[u]) {
      Arrangement ar;
      ar.gaps.push_back({AnchorSpec{false, -1, va}, AnchorSpec{false, -1, vb}});
      ar.xg_pairs = {{va, 0}, {vb, 0}};
      out.push_back(std::move(ar));
      return out;
    }
    const auto& frs = *phi.fragmap[u];
    const int t = static_cast<int>(frs.size());
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (uint32_t om = 0; om < (1u << t); ++om) {
        bool skip = false;
        std::vector<std::pair<int, int>> ht(t);  // oriented (head, tail)
        int frag_verts = 0;
        for (int i = 0; i < t && !skip; ++i) {
          const PathSub& p = frs[perm[i]];
          frag_verts += p.vertex_count();
          bool rev = om & (1u << i);
          if (rev && p.single_vertex()) skip = true;
          ht[i] = rev ? std::make_pair(p.back(), p.front())
                      : std::make_pair(p.front(), p.back());
        }
        if (skip) continue;
        if (A >= 0 && ht[0].first != A) continue;
        if (B >= 0 && ht[t - 1].second != B) continue;
        for (int lead = 0; lead < (A >= 0 ? 1 : 2); ++lead) {
          for (int trail = 0; trail < (B >= 0 ? 1 : 2); ++trail) {
            int gapcount = (t - 1) + lead + trail;
            int ends = (A < 0 ? 1 : 0) + (B < 0 ? 1 : 0);
            // Gap lengths are free, so only a gapless layout has fixed size;
            // the final path needs one inner vertex at the very least.
            if (gapcount == 0 && frag_verts + ends < 3) continue;
            Arrangement ar;
            if (A < 0) {
              if (lead == 0) {
                ar.xreq.push_back({va, bit(ht[0].first)});
              } else {
                ar.gaps.push_back({AnchorSpec{false, -1, va}, AnchorSpec{true, ht[0].first, -1}});
                ar.xg_pairs.push_back({va, static_cast<int>(ar.gaps.size()) - 1});
              }
            }
            for (int i = 0; i + 1 < t; ++i)
              ar.gaps.push_back(
                  {AnchorSpec{true, ht[i].second, -1}, AnchorSpec{true, ht[i + 1].first, -1}});
            if (B < 0) {
              if (trail == 0) {
                ar.xreq.push_back({vb, bit(ht[t - 1].second)});
              } else {
                ar.gaps.push_back(
                    {AnchorSpec{true, ht[t - 1].second, -1}, AnchorSpec{false, -1, vb}});
                ar.xg_pairs.push_back({vb, static_cast<int>(ar.gaps.size()) - 1});
              }
            }
            out.push_back(std::move(ar));
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  };

  std::vector<int> open_urpaths;
  for (int u = 0; u < nu; ++u)
    if (!comp[u]) open_urpaths.push_back(u);
  std::vector<std::vector<Arrangement>> arrs;
  for (int u : open_urpaths) {
    arrs.push_back(arrangements_of(u));
    if (arrs.back().empty()) return {};
  }

  std::vector<SearchData> out;
  std::set<std::string> seen;

  // --- one combination of arrangements ----------------------------------------

  auto process_combo = [&](const std::vector<int>& choice) {
    std::vector<SearchObject> objs;
    std::map<int, int> xobj;
    for (int v = 0; v < nf; ++v) {
      if (phi.vmap[v] >= 0) continue;
      xobj[v] = static_cast<int>(objs.size());
      SearchObject o;
      o.is_path = false;
      o.allow_mask = free_mask;
      objs.push_back(o);
    }
    std::vector<std::vector<int>> gaps_of(nu);
    std::set<std::pair<int, int>> req_pairs, allow_pairs;
    auto add_pair = [](std::set<std::pair<int, int>>& s, int a, int b) {
      s.insert({std::min(a, b), std::max(a, b)});
    };

    for (size_t i = 0; i < open_urpaths.size(); ++i) {
      int u = open_urpaths[i];
      const Arrangement& ar = arrs[i][choice[i]];
      std::vector<int> gap_ids;
      for (const GapSpec& g : ar.gaps) {
        SearchObject o;
        o.is_path = true;
        o.allow_mask = free_mask;
        auto resolve = [&](const AnchorSpec& a) {
          SearchAnchor r;
          r.is_h = a.is_h;
          r.h_vertex = a.hv;
          r.obj = a.is_h ? -1 : xobj.at(a.fv);
          return r;
        };
        o.entry = resolve(g.entry);
        o.exit = resolve(g.exit);
        gap_ids.push_back(static_cast<int>(objs.size()));
        objs.push_back(o);
      }
      gaps_of[u] = gap_ids;
      for (auto [fv, bits] : ar.xreq) objs[xobj.at(fv)].req_mask |= bits;
      for (auto [fv, gpos] : ar.xg_pairs) add_pair(req_pairs, xobj.at(fv), gap_ids[gpos]);
    }

    // Vertex-vertex adjacency.
    for (int v = 0; v < nf; ++v)
      for (int w = v + 1; w < nf; ++w) {
        if (!f.has_edge(v, w)) continue;
        bool dv = phi.vmap[v] >= 0, dw = phi.vmap[w] >= 0;
        if (dv && dw) continue;  // screened when the vertex map was built
        if (!dv && !dw) {
          add_pair(req_pairs, xobj.at(v), xobj.at(w));
        } else {
          int x = xobj.at(dv ? w : v);
          int hv = phi.vmap[dv ? v : w];
          objs[x].req_mask |= bit(hv);
        }
      }

    // Spoke and rung adjacency: each wanted adjacency not already carried by
    // inner segment vertices becomes a pick-one obligation over its candidate
    // realizations; every candidate is marked permissible up front.
    std::vector<std::vector<Candidate>> obls;
    bool dead = false;

    for (int w = 0; w < nf && !dead; ++w) {
      for (int u = 0; u < nu && !dead; ++u) {
        if (f.is_endpoint_of(w, u) || !f.has_spoke(w, u)) continue;
        if (phi.vmap[w] >= 0) {
          if (comp[u]) continue;  // screened when the partial inclusion was built
          uint32_t hb = bit(phi.vmap[w]);
          for (int g : gaps_of[u]) objs[g].allow_mask |= hb;
          if (nbr[phi.vmap[w]] & sint_mask[u]) continue;  // already adjacent
          if (gaps_of[u].empty()) {
            dead = true;
            break;
          }
          std::vector<Candidate> cands;
          for (int g : gaps_of[u]) cands.push_back({false, -1, -1, g, hb});
          obls.push_back(std::move(cands));
        } else {
          int x = xobj.at(w);
          std::vector<Candidate> cands;
          for (int g : gaps_of[u]) {
            add_pair(allow_pairs, x, g);
            cands.push_back({true, x, g, -1, 0});
          }
          objs[x].allow_mask |= sint_mask[u];
          for (int hv = 0; hv < nH; ++hv)
            if (sint_mask[u] & bit(hv)) cands.push_back({false, -1, -1, x, bit(hv)});
          if (cands.empty()) {
            dead = true;
            break;
          }
          obls.push_back(std::move(cands));
        }
      }
    }
    for (int u = 0; u < nu && !dead; ++u) {
      for (int u2 = u + 1; u2 < nu && !dead; ++u2) {
        if (!f.has_rung(u, u2)) continue;
        if (comp[u] && comp[u2]) continue;
        std::vector<Candidate> cands;
        for (int g : gaps_of[u]) {
          objs[g].allow_mask |= sint_mask[u2];
          for (int g2 : gaps_of[u2]) {
            add_pair(allow_pairs, g, g2);
            cands.push_back({true, g, g2, -1, 0});
          }
          for (int hv = 0; hv < nH; ++hv)
            if (sint_mask[u2] & bit(hv)) cands.push_back({false, -1, -1, g, bit(hv)});
        }
        for (int g2 : gaps_of[u2]) {
          objs[g2].allow_mask |= sint_mask[u];
          for (int hv = 0; hv < nH; ++hv)
            if (sint_mask[u] & bit(hv)) cands.push_back({false, -1, -1, g2, bit(hv)});
        }
        if (adj_of(sint_mask[u]) & sint_mask[u2]) continue;  // already adjacent
        if (cands.empty()) {
          dead = true;
          break;
        }
        obls.push_back(std::move(cands));
      }
    }
    if (dead) return;

    // Segment vertices of an urpath never label that urpath's own pieces; the
    // entry/exit vertices of a gap ride the transition rules instead.
    for (size_t i = 0; i < open_urpaths.size(); ++i)
      for (int g : gaps_of[open_urpaths[i]])
        require(((objs[g].req_mask | objs[g].allow_mask) & frag_mask[open_urpaths[i]]) == 0,
                "search data: gap label leak");

    long total_variants = 1;
    for (auto& o : obls) {
      total_variants *= static_cast<long>(o.size());
      if (total_variants > 100000) throw std::runtime_error("search data: obligation explosion");
    }

    std::vector<size_t> oc(obls.size(), 0);
    for (;;) {
      std::vector<SearchObject> vobjs = objs;
      std::set<std::pair<int, int>> vreq = req_pairs;
      for (size_t i = 0; i < obls.size(); ++i) {
        const Candidate& c = obls[i][oc[i]];
        if (c.is_pair)
          vreq.insert({std::min(c.a, c.b), std::max(c.a, c.b)});
        else
          vobjs[c.obj].req_mask |= c.hbit;
      }

      // Required adjacency between sought objects means consecutive placement,
      // so the requirement graph must consist of simple paths.
      const int nobj = static_cast<int>(vobjs.size());
      std::vector<std::vector<int>> radj(nobj);
      bool shape_ok = true;
      for (auto [a, b] : vreq) {
        radj[a].push_back(b);
        radj[b].push_back(a);
      }
      for (int y = 0; y < nobj && shape_ok; ++y)
        if (radj[y].size() > 2) shape_ok = false;
      std::vector<std::vector<int>> comps;
      if (shape_ok) {
        std::vector<char> vis(nobj, 0);
        for (int y = 0; y < nobj; ++y) {
          if (vis[y]) continue;
          // Walk to an end of the chain, then read it off; a cycle has no end.
          std::vector<int> cluster;
          {
            std::vector<int> st{y};
            vis[y] = 1;
            while (!st.empty()) {
              int c = st.back();
              st.pop_back();
              cluster.push_back(c);
              for (int t : radj[c])
                if (!vis[t]) {
                  vis[t] = 1;
                  st.push_back(t);
                }
            }
          }
          int endc = -1;
          for (int c : cluster)
            if (radj[c].size() <= 1) endc = endc < 0 ? c : std::min(endc, c);
          if (endc < 0) {
            shape_ok = false;  // cycle
            break;
          }
          std::vector<int> line{endc};
          int prev = -1, cur = endc;
          while (true) {
            int nxt = -1;
            for (int t : radj[cur])
              if (t != prev) nxt = t;
            if (nxt < 0) break;
            line.push_back(nxt);
            prev = cur;
            cur = nxt;
          }
          if (line.size() != cluster.size()) {
            shape_ok = false;
            break;
          }
          comps.push_back(std::move(line));
        }
      }

      if (shape_ok) {
        if (comps.empty()) {
          SearchData d;
          d.objects = vobjs;
          d.req_pairs = vreq;
          d.allow_pairs = allow_pairs;
          d.order.assign(std::max(K, 0), {});
          std::string key = serialize_search_data(d);
          if (seen.insert(key).second) out.push_back(std::move(d));
        } else if (K > 0) {
          const int nc = static_cast<int>(comps.size());
          std::vector<int> at(nc, 0), ori(nc, 0);
          auto assign_dfs = [&](auto&& self, int ci) -> void {
            if (ci == nc) {
              // Per line: every ordering of the assigned blocks.
              std::vector<std::vector<int>> byk(K);
              for (int c = 0; c < nc; ++c) byk[at[c]].push_back(c);
              auto emit_orders = [&](auto&& self2, int k) -> void {
                if (k == K) {
                  SearchData d;
                  d.objects = vobjs;
                  d.req_pairs = vreq;
                  d.allow_pairs = allow_pairs;
                  d.order.assign(K, {});
                  for (int kk = 0; kk < K; ++kk)
                    for (int c : byk[kk])
                      for (size_t idx = 0; idx < comps[c].size(); ++idx) {
                        int y = ori[c] ? comps[c][comps[c].size() - 1 - idx] : comps[c][idx];
                        d.order[kk].push_back(y);
                        d.objects[y].place = kk;
                      }
                  std::string key = serialize_search_data(d);
                  if (seen.insert(key).second) {
                    out.push_back(std::move(d));
                    if (out.size() > 200000)
                      throw std::runtime_error("search data: placement explosion");
                  }
                  return;
                }
                std::sort(byk[k].begin(), byk[k].end());
                do {
                  self2(self2, k + 1);
                } while (std::next_permutation(byk[k].begin(), byk[k].end()));
              };
              emit_orders(emit_orders, 0);
              return;
            }
            for (int k = 0; k < K; ++k) {
              at[ci] = k;
              for (int o = 0; o < (comps[ci].size() > 1 ? 2 : 1); ++o) {
                ori[ci] = o;
                self(self, ci + 1);
              }
            }
          };
          assign_dfs(assign_dfs, 0);
        }
      }

      // Advance the obligation odometer.
      size_t i = 0;
      for (; i < obls.size(); ++i) {
        if (++oc[i] < obls[i].size()) break;
        oc[i] = 0;
      }
      if (i == obls.size()) break;
    }
  };

  if (open_urpaths.empty()) {
    process_combo({});
  } else {
    std::vector<int> choice(open_urpaths.size(), 0);
    for (;;) {
      process_combo(choice);
      size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < static_cast<int>(arrs[i].size())) break;
        choice[i] = 0;
      }
      if (i == choice.size()) break;
    }
  }
  return out;
}

// --- matcher machine ------------------------------------------------------------

Nfa build_md(const Pathograph& h, const SearchData& d) {
  Alphabet ab = alphabet(h);
  Nfa n;
  n.ab = ab;
  const int K = ab.K;
  if (K == 0) {
    require(d.objects.empty(), "matcher: sought objects need a replacement path");
    n.start = n.add_state("accept", true);
    return n;
  }

  const int nobj = static_cast<int>(d.objects.size());
  if (nobj == 0) {
    // Nothing sought: the placement is complete among the named vertices and
    // therefore present in every realization, whose strings are the nonempty
    // ones.
    n.start = n.add_state("all-start");
    int any = n.add_state("all", true);
    for (int k = 0; k < K; ++k) {
      n.add_wild(n.start, k, any);
      n.add_wild(any, k, any);
    }
    return n;
  }
  for (const SearchObject& o : d.objects) {
    uint32_t anchors = 0;
    if (o.entry.is_h) anchors |= bit(o.entry.h_vertex);
    if (o.exit.is_h) anchors |= bit(o.exit.h_vertex);
    require(((o.req_mask | o.allow_mask) & anchors) == 0, "matcher: anchor inside label masks");
  }

  std::vector<int> start(K);
  for (int k = 0; k < K; ++k) start[k] = n.add_state("start" + std::to_string(k));
  int accept = n.add_state("accept", true);
  for (int k = 0; k < K; ++k) n.add_wild(start[k], k, start[k]);
  n.add_wild(accept, K - 1, accept);

  // Position bookkeeping.
  std::vector<int> pos_prev(nobj, -1), pos_next(nobj, -1);
  for (int k = 0; k < K; ++k)
    for (size_t i = 0; i < d.order[k].size(); ++i) {
      int y = d.order[k][i];
      require(d.objects[y].place == k, "matcher: placement mismatch");
      if (i > 0) pos_prev[y] = d.order[k][i - 1];
      if (i + 1 < d.order[k].size()) pos_next[y] = d.order[k][i + 1];
    }
  auto pair_in = [&](const std::set<std::pair<int, int>>& s, int a, int b) {
    return s.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::vector<int> right(nobj, -1), after(nobj, -1);
  for (int y = 0; y < nobj; ++y) {
    right[y] = n.add_state("right" + std::to_string(y));
    bool req_succ = pos_next[y] >= 0 && pair_in(d.req_pairs, y, pos_next[y]);
    if (!req_succ) {
      after[y] = n.add_state("after" + std::to_string(y));
      n.add_wild(after[y], d.objects[y].place, after[y]);
      n.add_wild(right[y], d.objects[y].place, after[y]);
    }
  }

  std::map<std::tuple<int, uint32_t, int>, int> xstate;
  auto path_state = [&](int y, uint32_t X, int orient) {
    auto key = std::make_tuple(y, X, orient);
    auto it = xstate.find(key);
    if (it != xstate.end()) return it->second;
    int id = n.add_state("obj" + std::to_string(y) + "x" + std::to_string(X) + "o" +
                         std::to_string(orient));
    xstate.emplace(key, id);
    return id;
  };

  for (int k = 0; k < K; ++k) {
    const auto& line = d.order[k];
    int nxt = k + 1 < K ? start[k + 1] : accept;
    if (line.empty()) {
      n.add_eps(start[k], nxt);
      continue;
    }
    for (size_t i = 0; i < line.size(); ++i) {
      int y = line[i];
      const SearchObject& o = d.objects[y];
      std::vector<int> from;
      if (i == 0) {
        from.push_back(start[k]);
      } else {
        int prev = line[i - 1];
        if (pair_in(d.req_pairs, prev, y)) {
          from.push_back(right[prev]);
        } else if (pair_in(d.allow_pairs, prev, y)) {
          require(after[prev] >= 0, "matcher: missing filler state");
          from.push_back(right[prev]);
          from.push_back(after[prev]);
        } else {
          require(after[prev] >= 0, "matcher: missing filler state");
          from.push_back(after[prev]);
        }
      }

      if (!o.is_path) {
        for_each_mask_between(o.req_mask, o.req_mask | o.allow_mask, [&](uint32_t W) {
          int sym = ab.id(k, W);
          for (int s : from) n.add_trans(s, sym, right[y]);
        });
      } else {
        // A stretch may be read with its two attachment sides either way
        // around, but a sought attachment must sit where the placement put it.
        auto side_ok = [&](const SearchAnchor& a, bool entry_side) {
          if (a.is_h) return true;
          require(a.obj >= 0, "matcher: dangling attachment");
          return entry_side ? pos_prev[y] == a.obj : pos_next[y] == a.obj;
        };
        for (int orient = 0; orient < 2; ++orient) {
          SearchAnchor en = orient ? o.exit : o.entry;
          SearchAnchor ex = orient ? o.entry : o.exit;
          if (!side_ok(en, true) || !side_ok(ex, false)) continue;
          uint32_t ea = en.is_h ? bit(en.h_vertex) : 0;
          uint32_t eb = ex.is_h ? bit(ex.h_vertex) : 0;
          // Single-symbol stretch.
          for_each_mask_between(ea | eb | o.req_mask, ea | eb | o.req_mask | o.allow_mask,
                                [&](uint32_t W) {
                                  int sym = ab.id(k, W);
                                  for (int s : from) n.add_trans(s, sym, right[y]);
                                });
          // Multi-symbol stretch: enter, accumulate coverage, leave.
          for_each_mask_between(ea, ea | o.req_mask | o.allow_mask, [&](uint32_t W) {
            int sym = ab.id(k, W);
            int tgt = path_state(y, W & o.req_mask, orient);
            for (int s : from) n.add_trans(s, sym, tgt);
          });
          uint32_t X = o.req_mask;
          for (uint32_t sub = o.req_mask;; sub = (sub - 1) & o.req_mask) {
            X = sub;
            int st = path_state(y, X, orient);
            for_each_mask_between(0, o.req_mask | o.allow_mask, [&](uint32_t W) {
              int sym = ab.id(k, W);
              n.add_trans(st, sym, path_state(y, X | (W & o.req_mask), orient));
            });
            for_each_mask_between(eb, eb | o.req_mask | o.allow_mask, [&](uint32_t W) {
              if ((X | (W & o.req_mask)) != o.req_mask) return;
              int sym = ab.id(k, W);
              n.add_trans(st, sym, right[y]);
            });
            if (sub == 0) break;
          }
          if (ea == eb && en.is_h == ex.is_h && en.obj == ex.obj) break;  // symmetric anchors
        }
      }
    }
    int last = line.back();
    n.add_eps(right[last], nxt);
    require(after[last] >= 0, "matcher: line must allow trailing fillers");
    n.add_eps(after[last], nxt);
  }
  n.start = start[0];
  return n;
}

Nfa build_mphi(const Pathograph& f, const Pathograph& h, const PartialInclusion& phi) {
  Pathograph H = strip_urpaths(h);
  std::vector<SearchData> ds = enumerate_search_data(f, h, H, phi);
  if (ds.empty()) {
    Nfa n;
    n.ab = alphabet(h);
    n.start = n.add_state("reject");
    return n;
  }
  std::vector<Nfa> machines;
  machines.reserve(ds.size());
  for (const SearchData& d : ds) machines.push_back(build_md(h, d));
  return nfa_union(machines);
}

// --- malformed strings ------------------------------------------------------------

Nfa build_illformed(const Pathograph& h) {
  Alphabet ab = alphabet(h);
  Nfa n;
  n.ab = ab;
  const int K = ab.K;
  n.start = n.add_state("ill-start");
  if (K == 0) return n;  // the empty string is the only word, and it is fine

  int sink = n.add_state("ill-sink", true);
  for (int k = 0; k < K; ++k) n.add_wild(sink, k, sink);

  // Indices must never decrease.
  {
    std::vector<int> dec(K);
    for (int m = 0; m < K; ++m) dec[m] = n.add_state("dec" + std::to_string(m));
    for (int m = 0; m < K; ++m)
      for (int k = 0; k < K; ++k) n.add_wild(dec[m], k, k < m ? sink : dec[k]);
    n.add_eps(n.start, dec[0]);
  }
  // Every index must appear.
  for (int i = 0; i < K; ++i) {
    int q = n.add_state("miss" + std::to_string(i), true);
    for (int k = 0; k < K; ++k)
      if (k != i) n.add_wild(q, k, q);
    n.add_eps(n.start, q);
  }
  for (int i = 0; i < K; ++i) {
    auto [a, b] = h.urpath_ends[i];
    // The first symbol of an index must name the left endpoint...
    {
      int q = n.add_state("funny-first" + std::to_string(i));
      for (int k = 0; k < K; ++k)
        if (k != i) n.add_wild(q, k, q);
      for (uint32_t m = 0; m < (1u << ab.n); ++m)
        if (!(m & bit(a))) n.add_trans(q, ab.id(i, m), sink);
      n.add_eps(n.start, q);
    }
    // ...and only that symbol may.
    {
      int q0 = n.add_state("extra-a" + std::to_string(i));
      int q1 = n.add_state("extra-a-armed" + std::to_string(i));
      for (int k = 0; k < K; ++k) {
        if (k != i) n.add_wild(q0, k, q0);
        n.add_wild(q1, k, q1);
      }
      for (uint32_t m = 0; m < (1u << ab.n); ++m) {
        n.add_trans(q0, ab.id(i, m), q1);
        if (m & bit(a)) n.add_trans(q1, ab.id(i, m), sink);
      }
      n.add_eps(n.start, q0);
    }
    // The last symbol of an index must name the right endpoint...
    {
      int q0 = n.add_state("funny-last" + std::to_string(i));
      int q1 = n.add_state("funny-last-armed" + std::to_string(i), true);
      for (int k = 0; k < K; ++k) {
        n.add_wild(q0, k, q0);
        if (k != i) n.add_wild(q1, k, q1);
      }
      for (uint32_t m = 0; m < (1u << ab.n); ++m)
        if (!(m & bit(b))) n.add_trans(q0, ab.id(i, m), q1);
      n.add_eps(n.start, q0);
    }
    // ...and only that symbol may.
    {
      int q0 = n.add_state("extra-b" + std::to_string(i));
      int q1 = n.add_state("extra-b-armed" + std::to_string(i));
      for (int k = 0; k < K; ++k) {
        n.add_wild(q0, k, q0);
        if (k != i) n.add_wild(q1, k, q1);
      }
      for (uint32_t m = 0; m < (1u << ab.n); ++m) {
        if (m & bit(b)) n.add_trans(q0, ab.id(i, m), q1);
        n.add_trans(q1, ab.id(i, m), sink);
      }
      n.add_eps(n.start, q0);
    }
  }
  // Labels may only name the urpath's endpoints and spoke neighbours: anything
  // else cannot be adjacent to a replacement path's inner vertices.
  {
    std::vector<uint32_t> legal(K, 0);
    for (int i = 0; i < K; ++i) {
      auto [a, b] = h.urpath_ends[i];
      legal[i] = bit(a) | bit(b);
    }
    for (auto [v, u] : h.spokes) legal[u] |= bit(v);
    int q = n.add_state("illegal-label");
    for (int k = 0; k < K; ++k) {
      n.add_wild(q, k, q);
      for (uint32_t m = 0; m < (1u << ab.n); ++m)
        if (m & ~legal[k]) n.add_trans(q, ab.id(k, m), sink);
    }
    n.add_eps(n.start, q);
  }
  return n;
}

Nfa build_uncovered(const Pathograph& h) {
  Alphabet ab = alphabet(h);
  Nfa n;
  n.ab = ab;
  n.start = n.add_state("unc-start");
  // One accepting branch per spoke: stay as long as no index-u symbol names v.
  for (auto [v, u] : h.spokes) {
    int q = n.add_state("unc-" + h.vertex_names[v] + "-" + h.urpath_names[u], true);
    for (int k = 0; k < ab.K; ++k)
      if (k != u) n.add_wild(q, k, q);
    for (uint32_t m = 0; m < (1u << ab.n); ++m)
      if (!(m & bit(v))) n.add_trans(q, ab.id(u, m), q);
    n.add_eps(n.start, q);
  }
  return n;
}

// --- full decision machine ---------------------------------------------------------

Dfa build_decision_dfa(const Pathograph& h, const std::vector<Pathograph>& family) {
  if (!h.rungs.empty())
    throw std::invalid_argument("decision machine: source must be rung-free");
  Pathograph H = strip_urpaths(h);
  Dfa acc = minimize(determinize(build_illformed(h)));
  if (!h.spokes.empty())
    acc = minimize(dfa_union(acc, minimize(determinize(build_uncovered(h)))));
  for (const Pathograph& f : family) {
    // A member that is nothing but one urpath between its two vertices is
    // found along some induced path with an inner vertex.  Any such path
    // contains a three-vertex stretch around any inner vertex, and that
    // stretch is itself a valid image, so the partial inclusions that cut
    // two or more named vertices out of the stretch add no strings to the
    // union.  Skipping them sidesteps the factorial arrangement growth.
    const bool bare_urpath = f.vertex_count() == 2 && f.urpath_names.size() == 1 &&
                             f.edges.empty() && f.spokes.empty() && f.rungs.empty();
    for (const PartialInclusion& phi : enumerate_partial_inclusions(f, H)) {
      if (bare_urpath) {
        int frag_verts = 0;
        for (const auto& frags : phi.fragmap)
          if (frags)
            for (const PathSub& p : *frags) frag_verts += p.vertex_count();
        if (frag_verts >= 2) continue;
      }
      std::vector<SearchData> ds = enumerate_search_data(f, h, H, phi);
      for (const SearchData& d : ds) {
        Dfa md = minimize(determinize(build_md(h, d)));
        acc = minimize(dfa_union(acc, md));
      }
    }
  }
  return minimize(complement(acc));
}

}  // namespace pg
