#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pathograph/core.hpp"

namespace pg {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// --- pathograph files ---------------------------------------------------------
//
//   # comment
//   vertices: a b c d
//   edge: a b
//   urpath: u1 a c
//   spoke: b u1
//   rung: u1 u2
//
// Multiple pathographs in one file are separated by a line containing `---`.

Pathograph parse_pgf(const std::string& text);
std::vector<Pathograph> parse_pgf_multi(const std::string& text);
std::string write_pgf(const Pathograph& p);

// --- realization files -----------------------------------------------------------
//
// A PGF graph section (vertices/edges only) followed by one `path:` line per
// urpath of the source pathograph, giving the full replacement path including
// both endpoint vertices:
//
//   path: u1 a x1 x2 c

struct PgrFile {
  Pathograph graph;
  std::vector<std::pair<std::string, std::vector<std::string>>> paths;
};

PgrFile parse_pgr(const std::string& text);
std::string write_pgr(const PgrFile& r);

// --- determination strings ----------------------------------------------------------
//
// Text form: space-separated symbols `k:{v1,v2}` with k a 1-based urpath index
// and the braces holding a comma-separated, possibly empty vertex-name list.

struct DetSymbol {
  int index = 0;  // 0-based urpath index
  std::set<VertexId> nbrs;
  bool operator==(const DetSymbol& o) const { return index == o.index && nbrs == o.nbrs; }
};

using DetString = std::vector<DetSymbol>;

std::string write_det_symbol(const Pathograph& h, const DetSymbol& s);
std::string write_det_string(const Pathograph& h, const DetString& s);
DetSymbol parse_det_symbol(const Pathograph& h, const std::string& tok);
DetString parse_det_string(const Pathograph& h, const std::string& text);

}  // namespace pg
