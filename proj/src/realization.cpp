#include "pathograph/realization.hpp"

#include <algorithm>
#include <sstream>

namespace pg {

namespace {

std::string internal_name(const Pathograph& h, UrpathId u, int pos) {
  return h.urpath_names[u] + "#" + std::to_string(pos + 1);
}

// Skeleton shared by all realizations with a fixed length tuple: named
// vertices, named edges, and the replacement paths (no spoke/rung edges yet).
Realization make_skeleton(const Pathograph& h, const std::vector<int>& lengths) {
  Realization r;
  r.graph.vertex_names = h.vertex_names;
  r.graph.edges = h.edges;
  r.internals.resize(h.urpath_count());
  for (int u = 0; u < h.urpath_count(); ++u) {
    auto [a, b] = h.urpath_ends[u];
    VertexId prev = a;
    for (int j = 0; j < lengths[u]; ++j) {
      VertexId z = r.graph.add_vertex(internal_name(h, u, j));
      r.internals[u].push_back(z);
      r.graph.add_edge(prev, z);
      prev = z;
    }
    r.graph.add_edge(prev, b);
  }
  return r;
}

}  // namespace

void for_each_realization(const Pathograph& h, int max_internal,
                          const std::function<bool(const Realization&)>& visit) {
  const int K = h.urpath_count();
  std::vector<int> lengths(K, 1);
  std::vector<std::pair<VertexId, UrpathId>> spoke_list(h.spokes.begin(), h.spokes.end());
  std::vector<std::pair<UrpathId, UrpathId>> rung_list(h.rungs.begin(), h.rungs.end());

  bool running = true;
  auto emit_for_lengths = [&]() {
    Realization base = make_skeleton(h, lengths);
    // Choice slots: one nonempty subset per spoke and per rung.
    const int ns = static_cast<int>(spoke_list.size());
    const int nr = static_cast<int>(rung_list.size());
    std::vector<unsigned long long> choice(ns + nr, 1);
    std::vector<unsigned long long> maxval(ns + nr);
    for (int i = 0; i < ns; ++i) maxval[i] = (1ull << lengths[spoke_list[i].second]) - 1;
    for (int i = 0; i < nr; ++i) {
      auto [ua, ub] = rung_list[i];
      maxval[ns + i] = (1ull << (lengths[ua] * lengths[ub])) - 1;
    }
    while (running) {
      Realization r = base;
      for (int i = 0; i < ns; ++i) {
        auto [v, u] = spoke_list[i];
        for (int j = 0; j < lengths[u]; ++j)
          if (choice[i] >> j & 1ull) r.graph.add_edge(v, base.internals[u][j]);
      }
      for (int i = 0; i < nr; ++i) {
        auto [ua, ub] = rung_list[i];
        for (int ja = 0; ja < lengths[ua]; ++ja)
          for (int jb = 0; jb < lengths[ub]; ++jb)
            if (choice[ns + i] >> (ja * lengths[ub] + jb) & 1ull)
              r.graph.add_edge(base.internals[ua][ja], base.internals[ub][jb]);
      }
      if (!visit(r)) {
        running = false;
        return;
      }
      // Advance the subset odometer, rightmost slot fastest.
      int pos = ns + nr - 1;
      while (pos >= 0) {
        if (choice[pos] < maxval[pos]) {
          choice[pos]++;
          break;
        }
        choice[pos] = 1;
        pos--;
      }
      if (pos < 0) return;
    }
  };

  if (K == 0) {
    Realization r;
    r.graph.vertex_names = h.vertex_names;
    r.graph.edges = h.edges;
    visit(r);
    return;
  }
  while (running) {
    emit_for_lengths();
    int pos = K - 1;
    while (pos >= 0) {
      if (lengths[pos] < max_internal) {
        lengths[pos]++;
        break;
      }
      lengths[pos] = 1;
      pos--;
    }
    if (pos < 0) break;
  }
}

std::vector<Realization> enumerate_realizations(const Pathograph& h, int max_internal) {
  std::vector<Realization> out;
  for_each_realization(h, max_internal, [&](const Realization& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

bool is_realization(const Pathograph& h, const Realization& r, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = h.vertex_count();
  if (!r.graph.is_graph()) return fail("realization carrier must be a plain graph");
  if (r.graph.vertex_count() < n) return fail("missing source vertices");
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (h.has_edge(v, w) != r.graph.has_edge(v, w))
        return fail("source edge set not preserved exactly between " + h.vertex_names[v] + " and " +
                    h.vertex_names[w]);
  if (static_cast<int>(r.internals.size()) != h.urpath_count())
    return fail("one internal path required per urpath");
  std::vector<int> owner(r.graph.vertex_count(), -1);
  for (int u = 0; u < h.urpath_count(); ++u) {
    if (r.internals[u].empty()) return fail("urpath " + h.urpath_names[u] + " has no internal vertex");
    for (VertexId z : r.internals[u]) {
      if (z < n) return fail("source vertex listed as an internal vertex");
      if (z >= r.graph.vertex_count()) return fail("internal vertex id out of range");
      if (owner[z] != -1) return fail("internal vertex assigned to two urpaths");
      owner[z] = u;
    }
  }
  for (int z = n; z < r.graph.vertex_count(); ++z)
    if (owner[z] == -1) return fail("vertex " + r.graph.vertex_names[z] + " belongs to no urpath");
  // Replacement paths are induced.
  for (int u = 0; u < h.urpath_count(); ++u) {
    auto [a, b] = h.urpath_ends[u];
    std::vector<VertexId> seq;
    seq.push_back(a);
    seq.insert(seq.end(), r.internals[u].begin(), r.internals[u].end());
    seq.push_back(b);
    for (size_t i = 0; i + 1 < seq.size(); ++i)
      if (!r.graph.has_edge(seq[i], seq[i + 1]))
        return fail("replacement path for " + h.urpath_names[u] + " is not a path");
    for (size_t i = 0; i < seq.size(); ++i)
      for (size_t j = i + 2; j < seq.size(); ++j)
        if (r.graph.has_edge(seq[i], seq[j]))
          return fail("replacement path for " + h.urpath_names[u] + " has a chord");
  }
  // Spoke semantics (urpath endpoints exempt: their adjacency is fixed by the
  // induced replacement path itself).
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < h.urpath_count(); ++u) {
      if (h.is_endpoint_of(v, u)) continue;
      bool any = false;
      for (VertexId z : r.internals[u])
        if (r.graph.has_edge(v, z)) {
          any = true;
          break;
        }
      if (any != h.has_spoke(v, u))
        return fail("spoke semantics violated between " + h.vertex_names[v] + " and " +
                    h.urpath_names[u]);
    }
  for (int u = 0; u < h.urpath_count(); ++u)
    for (int w = u + 1; w < h.urpath_count(); ++w) {
      bool any = false;
      for (VertexId x : r.internals[u]) {
        for (VertexId y : r.internals[w])
          if (r.graph.has_edge(x, y)) {
            any = true;
            break;
          }
        if (any) break;
      }
      if (any != h.has_rung(u, w))
        return fail("rung semantics violated between " + h.urpath_names[u] + " and " +
                    h.urpath_names[w]);
    }
  return true;
}

DetString determination_string(const Pathograph& h, const Realization& r) {
  DetString out;
  const int n = h.vertex_count();
  for (int u = 0; u < h.urpath_count(); ++u)
    for (VertexId z : r.internals[u]) {
      DetSymbol sym;
      sym.index = u;
      for (int v = 0; v < n; ++v)
        if (r.graph.has_edge(z, v)) sym.nbrs.insert(v);
      out.push_back(sym);
    }
  return out;
}

std::optional<Realization> realization_from_string(const Pathograph& h, const DetString& s,
                                                   std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<Realization> {
    if (why) *why = msg;
    return std::nullopt;
  };
  const int K = h.urpath_count();
  std::vector<std::vector<DetSymbol>> segs(K);
  int last = -1;
  for (const auto& sym : s) {
    if (sym.index < 0 || sym.index >= K) return fail("urpath index out of range");
    if (sym.index < last) return fail("urpath indices must be nondecreasing");
    last = sym.index;
    segs[sym.index].push_back(sym);
  }
  for (int u = 0; u < K; ++u)
    if (segs[u].empty()) return fail("no symbols for urpath " + h.urpath_names[u]);
  Realization r;
  r.graph.vertex_names = h.vertex_names;
  r.graph.edges = h.edges;
  r.internals.resize(K);
  for (int u = 0; u < K; ++u) {
    auto [a, b] = h.urpath_ends[u];
    VertexId prev = a;
    for (size_t j = 0; j < segs[u].size(); ++j) {
      VertexId z = r.graph.add_vertex(h.urpath_names[u] + "#" + std::to_string(j + 1));
      r.internals[u].push_back(z);
      r.graph.add_edge(prev, z);
      for (VertexId v : segs[u][j].nbrs) r.graph.add_edge(z, v);
      prev = z;
    }
    r.graph.add_edge(prev, b);
  }
  std::string sub_why;
  if (!is_realization(h, r, &sub_why)) return fail("not a realization: " + sub_why);
  // The string must be the determination string of what it builds; a symbol
  // that omits a path-forced adjacency (an endpoint edge the construction
  // added anyway) describes no realization at all.
  if (determination_string(h, r) != s)
    return fail("symbols disagree with the adjacencies they imply");
  return r;
}

bool is_f_free(const Pathograph& g, const std::vector<Pathograph>& family) {
  for (const auto& f : family)
    if (contains(g, f)) return false;
  return true;
}

bool is_minimal(const Pathograph& h, const Realization& r) {
  for (const auto& [v, u] : h.spokes) {
    int count = 0;
    for (VertexId z : r.internals[u])
      if (r.graph.has_edge(v, z)) count++;
    if (count != 1) return false;
  }
  for (const auto& [ua, ub] : h.rungs) {
    int count = 0;
    for (VertexId x : r.internals[ua])
      for (VertexId y : r.internals[ub])
        if (r.graph.has_edge(x, y)) count++;
    if (count != 1) return false;
  }
  return true;
}

BoundedDecision decide_bounded(const Pathograph& h, const std::vector<Pathograph>& family,
                               int max_internal) {
  BoundedDecision out;
  for_each_realization(h, max_internal, [&](const Realization& r) {
    if (is_f_free(r.graph, family)) {
      out.found = true;
      out.witness = r;
      return false;
    }
    return true;
  });
  return out;
}

PgrFile realization_to_pgr(const Pathograph& h, const Realization& r) {
  PgrFile out;
  out.graph = r.graph;
  for (int u = 0; u < h.urpath_count(); ++u) {
    auto [a, b] = h.urpath_ends[u];
    std::vector<std::string> names;
    names.push_back(r.graph.vertex_names[a]);
    for (VertexId z : r.internals[u]) names.push_back(r.graph.vertex_names[z]);
    names.push_back(r.graph.vertex_names[b]);
    out.paths.push_back({h.urpath_names[u], names});
  }
  return out;
}

std::optional<Realization> realization_from_pgr(const Pathograph& h, const PgrFile& file,
                                                std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<Realization> {
    if (why) *why = msg;
    return std::nullopt;
  };
  // Reorder the carrier graph so source vertices take their source ids.
  std::vector<int> remap(file.graph.vertex_count(), -1);
  Realization r;
  for (int v = 0; v < h.vertex_count(); ++v) {
    int w = file.graph.find_vertex(h.vertex_names[v]);
    if (w < 0) return fail("realization graph lacks source vertex " + h.vertex_names[v]);
    remap[w] = r.graph.add_vertex(h.vertex_names[v]);
  }
  for (int w = 0; w < file.graph.vertex_count(); ++w)
    if (remap[w] < 0) remap[w] = r.graph.add_vertex(file.graph.vertex_names[w]);
  for (const auto& [a, b] : file.graph.edges) r.graph.add_edge(remap[a], remap[b]);
  r.internals.resize(h.urpath_count());
  std::vector<char> seen(h.urpath_count(), 0);
  for (const auto& [uname, vs] : file.paths) {
    int u = h.find_urpath(uname);
    if (u < 0) return fail("path line names unknown urpath " + uname);
    if (seen[u]) return fail("duplicate path line for urpath " + uname);
    seen[u] = 1;
    std::vector<VertexId> seq;
    for (const auto& name : vs) {
      int w = file.graph.find_vertex(name);
      if (w < 0) return fail("path line names unknown vertex " + name);
      seq.push_back(remap[w]);
    }
    if (seq.size() < 3) return fail("path line for " + uname + " lists no internal vertex");
    auto [a, b] = h.urpath_ends[u];
    if (seq.front() == b && seq.back() == a) {
      std::reverse(seq.begin(), seq.end());
    } else if (!(seq.front() == a && seq.back() == b)) {
      return fail("path line for " + uname + " does not join its endpoints");
    }
    r.internals[u].assign(seq.begin() + 1, seq.end() - 1);
  }
  for (int u = 0; u < h.urpath_count(); ++u)
    if (!seen[u]) return fail("no path line for urpath " + h.urpath_names[u]);
  return r;
}

}  // namespace pg
