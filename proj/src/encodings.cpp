#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathograph/encodings.hpp"

namespace pg {

namespace {

void dedup_insert(std::map<std::string, Pathograph>& pool, const Pathograph& p) {
  pool.emplace(canonical_key(p), p);
}

std::vector<Pathograph> pool_to_vector(const std::map<std::string, Pathograph>& pool) {
  std::vector<Pathograph> out;
  out.reserve(pool.size());
  for (const auto& [key, p] : pool) out.push_back(p);
  return out;
}

bool urpath_between(const Pathograph& p, int v, int w) {
  for (const auto& [a, b] : p.urpath_ends)
    if ((a == v && b == w) || (a == w && b == v)) return true;
  return false;
}

}  // namespace

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::kSubgraph: return "subgraph";
    case Relation::kInducedSubgraph: return "induced-subgraph";
    case Relation::kMinor: return "minor";
    case Relation::kInducedMinor: return "induced-minor";
    case Relation::kTopologicalMinor: return "topological-minor";
    case Relation::kInducedTopologicalMinor: return "induced-topological-minor";
  }
  return "?";
}

Relation relation_from_name(const std::string& name) {
  if (name == "subgraph") return Relation::kSubgraph;
  if (name == "induced-subgraph") return Relation::kInducedSubgraph;
  if (name == "minor") return Relation::kMinor;
  if (name == "induced-minor") return Relation::kInducedMinor;
  if (name == "topological-minor") return Relation::kTopologicalMinor;
  if (name == "induced-topological-minor") return Relation::kInducedTopologicalMinor;
  throw std::invalid_argument("unknown relation: " + name);
}

std::vector<Pathograph> adjacency_closure(const std::vector<Pathograph>& base) {
  struct Add {
    int kind;  // 0 edge, 1 spoke, 2 rung
    int a, b;
  };
  std::map<std::string, Pathograph> pool;
  for (const Pathograph& p : base) {
    std::vector<Add> adds;
    for (int v = 0; v < p.vertex_count(); ++v)
      for (int w = v + 1; w < p.vertex_count(); ++w)
        if (!p.has_edge(v, w) && !urpath_between(p, v, w)) adds.push_back({0, v, w});
    for (int v = 0; v < p.vertex_count(); ++v)
      for (int u = 0; u < p.urpath_count(); ++u)
        if (!p.has_spoke(v, u) && !p.is_endpoint_of(v, u)) adds.push_back({1, v, u});
    for (int u = 0; u < p.urpath_count(); ++u)
      for (int u2 = u + 1; u2 < p.urpath_count(); ++u2)
        if (!p.has_rung(u, u2)) adds.push_back({2, u, u2});
    if (adds.size() > 20)
      throw std::runtime_error("adjacency closure: too many optional adjacencies");
    for (uint64_t mask = 0; mask < (1ull << adds.size()); ++mask) {
      Pathograph q = p;
      for (size_t i = 0; i < adds.size(); ++i) {
        if (!(mask & (1ull << i))) continue;
        const Add& a = adds[i];
        if (a.kind == 0)
          q.add_edge(a.a, a.b);
        else if (a.kind == 1)
          q.add_spoke(a.a, a.b);
        else
          q.add_rung(a.a, a.b);
      }
      dedup_insert(pool, q);
    }
  }
  return pool_to_vector(pool);
}

std::vector<Pathograph> subdivision_closure(const std::vector<Pathograph>& base) {
  std::map<std::string, Pathograph> pool;
  for (const Pathograph& p : base) {
    const auto edges = std::vector<std::pair<VertexId, VertexId>>(p.edges.begin(), p.edges.end());
    if (edges.size() > 20)
      throw std::runtime_error("subdivision closure: too many edges");
    for (uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
      Pathograph q = p;
      q.edges.clear();
      int fresh = 0;
      for (size_t i = 0; i < edges.size(); ++i) {
        if (mask & (1ull << i))
          q.add_urpath("s" + std::to_string(++fresh), edges[i].first, edges[i].second);
        else
          q.edges.insert(edges[i]);
      }
      dedup_insert(pool, q);
    }
  }
  return pool_to_vector(pool);
}

std::vector<Pathograph> connector_shapes(int leaves, int max_size) {
  std::map<std::string, Pathograph> pool;
  for (int nv = 1; nv <= max_size; ++nv) {
    // All labeled trees on nv vertices, via their sequence encoding.
    std::vector<std::vector<std::pair<int, int>>> trees;
    if (nv == 1) {
      trees.push_back({});
    } else if (nv == 2) {
      trees.push_back({{0, 1}});
    } else {
      std::vector<int> seq(nv - 2, 0);
      for (;;) {
        std::vector<int> deg(nv, 1);
        for (int s : seq) ++deg[s];
        std::vector<std::pair<int, int>> edges;
        std::vector<int> d = deg;
        std::set<int> leaf_set;
        for (int v = 0; v < nv; ++v)
          if (d[v] == 1) leaf_set.insert(v);
        for (int s : seq) {
          int leaf = *leaf_set.begin();
          leaf_set.erase(leaf_set.begin());
          edges.push_back({std::min(leaf, s), std::max(leaf, s)});
          if (--d[s] == 1) leaf_set.insert(s);
        }
        int a = *leaf_set.begin();
        int b = *std::next(leaf_set.begin());
        edges.push_back({std::min(a, b), std::max(a, b)});
        trees.push_back(std::move(edges));
        int i = 0;
        for (; i < nv - 2; ++i) {
          if (++seq[i] < nv) break;
          seq[i] = 0;
        }
        if (i == nv - 2) break;
      }
    }
    for (const auto& edges : trees) {
      std::vector<int> deg(nv, 0);
      for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
      }
      int nleaves = 0;
      bool ok = true;
      for (int v = 0; v < nv; ++v) {
        if (deg[v] == 2) ok = false;  // compressible: covered by a smaller shape
        if (deg[v] == 1) ++nleaves;
      }
      if (!ok || nleaves > leaves) continue;
      const int ne = static_cast<int>(edges.size());
      for (uint32_t mask = 0; mask < (1u << ne); ++mask) {
        int nurp = 0;
        for (int i = 0; i < ne; ++i)
          if (mask & (1u << i)) ++nurp;
        if (nv + nurp > max_size) continue;
        Pathograph q;
        for (int v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v));
        int fresh = 0;
        for (int i = 0; i < ne; ++i) {
          if (mask & (1u << i))
            q.add_urpath("u" + std::to_string(++fresh), edges[i].first, edges[i].second);
          else
            q.add_edge(edges[i].first, edges[i].second);
        }
        dedup_insert(pool, q);
      }
    }
  }
  return pool_to_vector(pool);
}

std::vector<Pathograph> inflation_closure(const Pathograph& H, int max_size) {
  if (!H.is_graph()) throw std::invalid_argument("inflation closure: target must be a plain graph");
  const int n = H.vertex_count();
  if (n == 0) return {Pathograph{}};
  std::vector<int> deg(n, 0);
  for (auto [a, b] : H.edges) {
    ++deg[a];
    ++deg[b];
  }
  std::map<int, std::vector<Pathograph>> shapes_by_degree;
  for (int v = 0; v < n; ++v) {
    int d = std::max(1, deg[v]);
    if (!shapes_by_degree.count(d)) shapes_by_degree[d] = connector_shapes(d, max_size);
  }

  std::map<std::string, Pathograph> pool;
  std::vector<const Pathograph*> pick(n, nullptr);

  auto emit = [&]() {
    // Assemble the disjoint union, remembering each part's vertex offsets.
    Pathograph q;
    std::vector<int> voff(n, 0), uoff(n, 0);
    for (int i = 0; i < n; ++i) {
      voff[i] = q.vertex_count();
      uoff[i] = q.urpath_count();
      const Pathograph& c = *pick[i];
      for (int v = 0; v < c.vertex_count(); ++v)
        q.add_vertex("v" + std::to_string(i) + "_" + std::to_string(v));
      for (int u = 0; u < c.urpath_count(); ++u)
        q.add_urpath("u" + std::to_string(i) + "_" + std::to_string(u),
                     voff[i] + c.urpath_ends[u].first, voff[i] + c.urpath_ends[u].second);
      for (auto [a, b] : c.edges) q.add_edge(voff[i] + a, voff[i] + b);
    }
    // Every nonempty cross-adjacency pattern per target edge.
    std::vector<std::pair<int, int>> hedges(H.edges.begin(), H.edges.end());
    std::vector<std::vector<std::pair<int, int>>> cross(hedges.size());
    std::vector<uint64_t> count(hedges.size());
    uint64_t total = 1;
    for (size_t e = 0; e < hedges.size(); ++e) {
      auto [i, j] = hedges[e];
      for (int a = 0; a < pick[i]->vertex_count(); ++a)
        for (int b = 0; b < pick[j]->vertex_count(); ++b)
          cross[e].push_back({voff[i] + a, voff[j] + b});
      count[e] = (1ull << cross[e].size()) - 1;  // nonempty subsets
      total *= count[e];
      if (cross[e].size() > 20 || total > 2000000)
        throw std::runtime_error("inflation closure: cross-pattern explosion");
    }
    std::vector<uint64_t> sel(hedges.size(), 1);  // subset masks, skipping empty
    if (hedges.empty()) {
      dedup_insert(pool, q);
      return;
    }
    for (;;) {
      Pathograph r = q;
      for (size_t e = 0; e < hedges.size(); ++e)
        for (size_t t = 0; t < cross[e].size(); ++t)
          if (sel[e] & (1ull << t)) r.add_edge(cross[e][t].first, cross[e][t].second);
      dedup_insert(pool, r);
      size_t e = 0;
      for (; e < hedges.size(); ++e) {
        if (++sel[e] <= count[e]) break;
        sel[e] = 1;
      }
      if (e == hedges.size()) break;
    }
  };

  auto dfs = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      emit();
      return;
    }
    const auto& shapes = shapes_by_degree[std::max(1, deg[i])];
    for (const Pathograph& c : shapes) {
      int sz = c.vertex_count() + c.urpath_count();
      if (used + sz + (n - i - 1) > max_size) continue;  // each later part needs >= 1
      pick[i] = &c;
      self(self, i + 1, used + sz);
    }
  };
  dfs(dfs, 0, 0);
  return pool_to_vector(pool);
}

std::vector<Pathograph> encoding_family(const Pathograph& H, Relation rel, int max_size) {
  switch (rel) {
    case Relation::kSubgraph: return adjacency_closure({H});
    case Relation::kInducedSubgraph: return {H};
    case Relation::kMinor: return adjacency_closure(inflation_closure(H, max_size));
    case Relation::kInducedMinor: return inflation_closure(H, max_size);
    case Relation::kTopologicalMinor: return adjacency_closure(subdivision_closure({H}));
    case Relation::kInducedTopologicalMinor: return subdivision_closure({H});
  }
  throw std::logic_error("encoding family: bad relation");
}

bool relation_holds(const Pathograph& H, const Pathograph& G, Relation rel, int max_size) {
  if (!G.is_graph()) throw std::invalid_argument("relation check: host must be a plain graph");
  for (const Pathograph& m : encoding_family(H, rel, max_size))
    if (contains(G, m)) return true;
  return false;
}

}  // namespace pg
