#include "pathograph/formats.hpp"

#include <algorithm>
#include <sstream>

namespace pg {

namespace {

std::string strip_comment(const std::string& line) {
  // A comment starts at a '#' only at the start of the line or after blank
  // space; names may legitimately contain interior '#' (replacement-path
  // vertices are written `<urpath>#<position>`).
  size_t pos = std::string::npos;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
      pos = i;
      break;
    }
  }
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '.' || c == '-' ||
          c == '+'))
      return false;
  return true;
}

struct LineReader {
  std::vector<std::pair<int, std::string>> lines;  // (line number, stripped content)
  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int num = 0;
    while (std::getline(is, raw)) {
      ++num;
      std::string s = strip_comment(raw);
      if (!s.empty()) lines.push_back({num, s});
    }
  }
};

int need_vertex(const Pathograph& p, const std::string& name, int line) {
  int v = p.find_vertex(name);
  if (v < 0) throw ParseError(line, "unknown vertex: " + name);
  return v;
}

int need_urpath(const Pathograph& p, const std::string& name, int line) {
  int u = p.find_urpath(name);
  if (u < 0) throw ParseError(line, "unknown urpath: " + name);
  return u;
}

Pathograph parse_section(const std::vector<std::pair<int, std::string>>& lines, bool allow_paths,
                         std::vector<std::pair<std::string, std::vector<std::string>>>* paths) {
  Pathograph p;
  for (const auto& [num, s] : lines) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(num, "expected `keyword: ...`");
    std::string kw = s.substr(0, colon);
    auto toks = split_ws(s.substr(colon + 1));
    if (kw == "vertices") {
      for (const auto& t : toks) {
        if (!valid_name(t)) throw ParseError(num, "bad vertex name: " + t);
        if (p.find_vertex(t) >= 0) throw ParseError(num, "duplicate vertex: " + t);
        p.add_vertex(t);
      }
    } else if (kw == "edge") {
      if (toks.size() != 2) throw ParseError(num, "edge wants two vertex names");
      int a = need_vertex(p, toks[0], num), b = need_vertex(p, toks[1], num);
      if (a == b) throw ParseError(num, "self-loop edge at " + toks[0]);
      p.add_edge(a, b);
    } else if (kw == "urpath") {
      if (toks.size() != 3) throw ParseError(num, "urpath wants a name and two vertex names");
      if (!valid_name(toks[0])) throw ParseError(num, "bad urpath name: " + toks[0]);
      if (p.find_urpath(toks[0]) >= 0) throw ParseError(num, "duplicate urpath: " + toks[0]);
      int a = need_vertex(p, toks[1], num), b = need_vertex(p, toks[2], num);
      if (a == b) throw ParseError(num, "urpath endpoints must differ");
      p.add_urpath(toks[0], a, b);
    } else if (kw == "spoke") {
      if (toks.size() != 2) throw ParseError(num, "spoke wants a vertex name and an urpath name");
      int v = need_vertex(p, toks[0], num);
      int u = need_urpath(p, toks[1], num);
      if (p.is_endpoint_of(v, u))
        throw ParseError(num, "spoke from endpoint " + toks[0] + " to its own urpath");
      p.add_spoke(v, u);
    } else if (kw == "rung") {
      if (toks.size() != 2) throw ParseError(num, "rung wants two urpath names");
      int a = need_urpath(p, toks[0], num), b = need_urpath(p, toks[1], num);
      if (a == b) throw ParseError(num, "rung endpoints must differ");
      p.add_rung(a, b);
    } else if (kw == "path" && allow_paths) {
      if (toks.size() < 3) throw ParseError(num, "path wants an urpath name and its full vertex list");
      std::vector<std::string> vs(toks.begin() + 1, toks.end());
      for (const auto& t : vs) need_vertex(p, t, num);
      paths->push_back({toks[0], vs});
    } else {
      throw ParseError(num, "unknown keyword: " + kw);
    }
  }
  auto violations = validate(p);
  if (!violations.empty()) throw ParseError(0, "invalid pathograph: " + violations.front());
  return p;
}

}  // namespace

Pathograph parse_pgf(const std::string& text) {
  LineReader r(text);
  for (const auto& [num, s] : r.lines)
    if (s == "---") throw ParseError(num, "multiple sections; expected a single pathograph");
  return parse_section(r.lines, false, nullptr);
}

std::vector<Pathograph> parse_pgf_multi(const std::string& text) {
  LineReader r(text);
  std::vector<Pathograph> out;
  std::vector<std::pair<int, std::string>> cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back(parse_section(cur, false, nullptr));
      cur.clear();
    }
  };
  for (const auto& entry : r.lines) {
    if (entry.second == "---")
      flush();
    else
      cur.push_back(entry);
  }
  flush();
  return out;
}

std::string write_pgf(const Pathograph& p) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& n : p.vertex_names) os << ' ' << n;
  os << '\n';
  for (const auto& [a, b] : p.edges)
    os << "edge: " << p.vertex_names[a] << ' ' << p.vertex_names[b] << '\n';
  for (int u = 0; u < p.urpath_count(); ++u)
    os << "urpath: " << p.urpath_names[u] << ' ' << p.vertex_names[p.urpath_ends[u].first] << ' '
       << p.vertex_names[p.urpath_ends[u].second] << '\n';
  for (const auto& [v, u] : p.spokes)
    os << "spoke: " << p.vertex_names[v] << ' ' << p.urpath_names[u] << '\n';
  for (const auto& [a, b] : p.rungs)
    os << "rung: " << p.urpath_names[a] << ' ' << p.urpath_names[b] << '\n';
  return os.str();
}

PgrFile parse_pgr(const std::string& text) {
  LineReader r(text);
  PgrFile out;
  out.graph = parse_section(r.lines, true, &out.paths);
  if (!out.graph.is_graph()) throw ParseError(0, "realization graph may not contain urpaths");
  return out;
}

std::string write_pgr(const PgrFile& r) {
  std::ostringstream os;
  os << write_pgf(r.graph);
  for (const auto& [name, vs] : r.paths) {
    os << "path: " << name;
    for (const auto& v : vs) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string write_det_symbol(const Pathograph& h, const DetSymbol& s) {
  std::ostringstream os;
  os << (s.index + 1) << ":{";
  bool first = true;
  for (VertexId v : s.nbrs) {
    if (!first) os << ',';
    first = false;
    os << h.vertex_names[v];
  }
  os << '}';
  return os.str();
}

std::string write_det_string(const Pathograph& h, const DetString& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << write_det_symbol(h, s[i]);
  }
  return os.str();
}

DetSymbol parse_det_symbol(const Pathograph& h, const std::string& tok) {
  auto colon = tok.find(":{");
  if (colon == std::string::npos || tok.back() != '}')
    throw ParseError(0, "bad symbol (want k:{...}): " + tok);
  int index;
  try {
    size_t used = 0;
    index = std::stoi(tok.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (...) {
    throw ParseError(0, "bad urpath index in symbol: " + tok);
  }
  if (index < 1 || index > h.urpath_count())
    throw ParseError(0, "urpath index out of range in symbol: " + tok);
  DetSymbol sym;
  sym.index = index - 1;
  std::string body = tok.substr(colon + 2, tok.size() - colon - 3);
  if (!body.empty()) {
    std::istringstream is(body);
    std::string name;
    while (std::getline(is, name, ',')) {
      int v = h.find_vertex(name);
      if (v < 0) throw ParseError(0, "unknown vertex in symbol: " + name);
      sym.nbrs.insert(v);
    }
  }
  return sym;
}

DetString parse_det_string(const Pathograph& h, const std::string& text) {
  DetString out;
  for (const std::string& tok : split_ws(text)) out.push_back(parse_det_symbol(h, tok));
  return out;
}

}  // namespace pg
