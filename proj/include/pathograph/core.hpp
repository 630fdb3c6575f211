#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pg {

using VertexId = int;
using UrpathId = int;

/**
 * A graph extended with urpaths: placeholder elements that stand for induced
 * paths of unspecified positive internal length between two designated,
 * nonadjacent endpoint vertices.  Spokes attach a vertex to the internal
 * vertices of an urpath; rungs attach the internals of two urpaths to each
 * other.  A plain graph is the special case with no urpaths.
 */
struct Pathograph {
  std::vector<std::string> vertex_names;
  std::vector<std::string> urpath_names;
  std::vector<std::pair<VertexId, VertexId>> urpath_ends;  // (left, right)
  std::set<std::pair<VertexId, VertexId>> edges;           // stored with first < second
  std::set<std::pair<VertexId, UrpathId>> spokes;
  std::set<std::pair<UrpathId, UrpathId>> rungs;  // stored with first < second

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int urpath_count() const { return static_cast<int>(urpath_names.size()); }
  bool is_graph() const { return urpath_names.empty(); }

  VertexId add_vertex(const std::string& name);
  UrpathId add_urpath(const std::string& name, VertexId left, VertexId right);
  void add_edge(VertexId a, VertexId b);
  void add_spoke(VertexId v, UrpathId u);
  void add_rung(UrpathId a, UrpathId b);

  bool has_edge(VertexId a, VertexId b) const;
  bool has_spoke(VertexId v, UrpathId u) const;
  bool has_rung(UrpathId a, UrpathId b) const;
  bool is_endpoint_of(VertexId v, UrpathId u) const;

  int find_vertex(const std::string& name) const;  // -1 if absent
  int find_urpath(const std::string& name) const;  // -1 if absent

  std::vector<VertexId> edge_neighbors(VertexId v) const;

  // Structural comparison over ids; names are presentation only.
  bool same_structure(const Pathograph& o) const;
  std::string structure_key() const;  // deterministic label-sensitive encoding
};

/**
 * A path inside a pathograph: an alternating vertex/connector sequence where
 * each connector is either an edge between consecutive vertices or an urpath
 * whose endpoints are the consecutive vertices.  A single vertex with no
 * connectors is also a path.
 */
struct PathConn {
  bool is_urpath = false;
  UrpathId urpath = -1;  // meaningful when is_urpath
};

struct PathSub {
  std::vector<VertexId> verts;   // v0 .. vt, t >= 0
  std::vector<PathConn> conns;   // size verts.size() - 1

  int vertex_count() const { return static_cast<int>(verts.size()); }
  VertexId front() const { return verts.front(); }
  VertexId back() const { return verts.back(); }
  bool single_vertex() const { return verts.size() == 1; }
  bool has_endpoints(VertexId a, VertexId b) const;

  std::vector<VertexId> interior_verts() const;  // all but the two ends
  std::set<UrpathId> urpath_set() const;
  std::set<VertexId> vert_set() const;
  PathSub reversed() const;

  // Canonical identity: element sets plus orientation-free sequence.
  std::string key() const;
};

/** Structure-preserving map: injective on vertices, urpaths to paths. */
struct Inclusion {
  std::vector<VertexId> vmap;  // f-vertex -> g-vertex
  std::vector<PathSub> umap;   // f-urpath -> path of g
};

// --- validation ------------------------------------------------------------

/** Empty result means structurally well formed; entries describe violations. */
std::vector<std::string> validate(const Pathograph& p);

// --- subpathographs & connectivity ------------------------------------------

/**
 * Delete the given vertices and urpaths; urpaths incident to a deleted vertex
 * are deleted too, along with all dangling edges, spokes, and rungs.
 */
Pathograph subpathograph(const Pathograph& p, const std::set<VertexId>& del_v,
                         const std::set<UrpathId>& del_u);

/**
 * True when the element set cannot be split into two nonempty parts with no
 * edge, spoke, rung, or urpath-endpoint incidence across the split.
 */
bool is_connected(const Pathograph& p);

// --- paths -------------------------------------------------------------------

/** All paths of p, deduplicated up to orientation. */
std::vector<PathSub> enumerate_paths(const Pathograph& p);

/** Validity check used by the enumerator and by inclusion verification. */
bool is_valid_path(const Pathograph& p, const PathSub& path);

// --- inclusions ---------------------------------------------------------------

/**
 * Search for an inclusion of f into g: an injective vertex map together with
 * an assignment of internally disjoint paths of g to the urpaths of f, with
 * matching endpoints and with adjacency between images mirroring adjacency in
 * f exactly.  Deterministic; returns the first embedding in search order.
 */
std::optional<Inclusion> find_inclusion(const Pathograph& f, const Pathograph& g);

/** Full validator for a candidate inclusion (used by tests and compose). */
bool check_inclusion(const Pathograph& f, const Pathograph& g, const Inclusion& inc);

/** Containment of the structure described by f inside g. */
bool contains(const Pathograph& g, const Pathograph& f);

/** Compose inclusions A -> B -> C into an inclusion A -> C. */
Inclusion compose(const Pathograph& a, const Pathograph& b, const Pathograph& c,
                  const Inclusion& phi, const Inclusion& psi);

// --- isomorphism ---------------------------------------------------------------

/** Exact structural equivalence by bijective relabeling (orientation-free). */
bool is_isomorphic(const Pathograph& p, const Pathograph& q);

/** Canonical string: equal keys if and only if isomorphic. */
std::string canonical_key(const Pathograph& p);

// --- element adjacency helpers (shared by inclusion and search machinery) -----

/** Adjacent in p: edge, spoke, or rung between the two elements. */
bool elements_adjacent(const Pathograph& p, bool a_is_urpath, int a, bool b_is_urpath, int b);

/**
 * Adjacency between the images of two f-elements inside g, following the
 * realization reading: a path meets another element through its interior
 * (internal vertices and urpath connectors), never through its two end
 * vertices.
 */
bool image_adjacent_vv(const Pathograph& g, VertexId a, VertexId b);
bool image_adjacent_vp(const Pathograph& g, VertexId v, const PathSub& path);
bool image_adjacent_pp(const Pathograph& g, const PathSub& a, const PathSub& b);

}  // namespace pg
