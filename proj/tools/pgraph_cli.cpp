// pgraph: command-line surface for the pathograph calculus library.
//
// Exit codes: 0 = yes / success, 1 = no, 2 = unknown (bound hit),
// 3 = usage or parse error, 4 = precondition unmet, 5 = not a realization.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathograph/automaton.hpp"
#include "pathograph/closedcase.hpp"
#include "pathograph/core.hpp"
#include "pathograph/encodings.hpp"
#include "pathograph/formats.hpp"
#include "pathograph/realization.hpp"
#include "pathograph/reductions.hpp"
#include "pathograph/truemper.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;
constexpr int kPrecondition = 4;
constexpr int kNotRealization = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

pg::Pathograph load_pgf(const std::string& path) { return pg::parse_pgf(read_file(path)); }

std::vector<pg::Pathograph> load_family(const std::vector<std::string>& paths) {
  std::vector<pg::Pathograph> family;
  for (const auto& path : paths) {
    auto blocks = pg::parse_pgf_multi(read_file(path));
    family.insert(family.end(), blocks.begin(), blocks.end());
  }
  return family;
}

std::string write_pgf_multi(const std::vector<pg::Pathograph>& blocks) {
  std::ostringstream out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << "---\n";
    out << pg::write_pgf(blocks[i]);
  }
  return out.str();
}

std::pair<int, int> parse_bounds(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("bounds must look like '4x4'");
  try {
    int a = std::stoi(text.substr(0, x));
    int b = std::stoi(text.substr(x + 1));
    if (a < 1 || b < 1) throw UsageError("bounds must be positive");
    return {a, b};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bounds must look like '4x4'");
  }
}

void print_witness(const pg::Pathograph& h, const pg::Realization& r,
                   const std::string& out_path) {
  std::cout << "witness: " << pg::write_det_string(h, pg::determination_string(h, r)) << "\n";
  std::string pgr = pg::write_pgr(pg::realization_to_pgr(h, r));
  if (out_path.empty())
    std::cout << pgr;
  else
    write_output(out_path, pgr);
}

std::string closedness_failure(const pg::ClosednessReport& rep) {
  return "family is not closed: member " + std::to_string(rep.member + 1) + " plus " +
         rep.addition + " escapes the family";
}

// --- commands -----------------------------------------------------------------------

int cmd_validate(const std::string& h_path) {
  pg::Pathograph h = load_pgf(h_path);
  auto problems = pg::validate(h);
  if (problems.empty()) {
    std::cout << "valid: " << h.vertex_count() << " vertices, " << h.urpath_count()
              << " urpaths, " << h.edges.size() << " edges, " << h.spokes.size() << " spokes, "
              << h.rungs.size() << " rungs\n";
    return kYes;
  }
  for (const auto& p : problems) std::cout << "invalid: " << p << "\n";
  return kNo;
}

int cmd_decide(const std::string& h_path, const std::vector<std::string>& family_paths,
               const std::string& mode, int max_internal, const std::string& out_path) {
  pg::Pathograph h = load_pgf(h_path);
  std::vector<pg::Pathograph> family = load_family(family_paths);

  std::string chosen = mode;
  if (mode == "auto") {
    if (h.rungs.empty())
      chosen = "rungless";
    else if (pg::is_closed(family).closed)
      chosen = "closed";
    else
      chosen = "oracle";
    std::cout << "mode: " << chosen << " (auto)\n";
  } else {
    std::cout << "mode: " << chosen << "\n";
  }

  if (chosen == "rungless") {
    if (!h.rungs.empty())
      throw PreconditionError("mode rungless: the pathograph has a rung");
    pg::Dfa d = pg::build_decision_dfa(h, family);
    pg::Emptiness e = pg::is_empty(d);
    if (e.empty) {
      std::cout << "no family-free realization\n";
      return kNo;
    }
    pg::DetString s;
    for (int sym : e.witness) s.push_back(pg::symbol_of(d.ab, sym));
    auto r = pg::realization_from_string(h, s);
    if (!r) throw std::logic_error("accepted string failed to rebuild");
    std::cout << "family-free realization exists\n";
    print_witness(h, *r, out_path);
    return kYes;
  }
  if (chosen == "closed") {
    auto rep = pg::is_closed(family);
    if (!rep.closed) throw PreconditionError(closedness_failure(rep));
    if (!pg::decide_closed(h, family)) {
      std::cout << "no family-free realization\n";
      return kNo;
    }
    auto r = pg::closed_witness(h, family);
    if (!r) throw std::logic_error("positive verdict without witness");
    std::cout << "family-free realization exists\n";
    print_witness(h, *r, out_path);
    return kYes;
  }
  if (chosen == "oracle") {
    auto verdict = pg::decide_bounded(h, family, max_internal);
    if (!verdict.found) {
      std::cout << "unknown at bound " << max_internal << "\n";
      return kUnknown;
    }
    std::cout << "family-free realization exists\n";
    print_witness(h, *verdict.witness, out_path);
    return kYes;
  }
  throw UsageError("mode must be auto, rungless, closed, or oracle");
}

int cmd_characterize(const std::string& h_path, const std::vector<std::string>& family_paths,
                     const std::string& out_path) {
  pg::Pathograph h = load_pgf(h_path);
  if (!h.rungs.empty()) throw PreconditionError("characterize: the pathograph has a rung");
  std::vector<pg::Pathograph> family = load_family(family_paths);
  pg::Dfa d = pg::build_decision_dfa(h, family);
  write_output(out_path, pg::write_dfa(h, d));
  if (pg::is_empty(d).empty)
    std::cout << "empty language\n";
  else
    std::cout << "regex: " << pg::dfa_to_regex(h, d) << "\n";
  return kYes;
}

int cmd_check(const std::string& h_path, const std::vector<std::string>& rest) {
  if (rest.empty()) throw UsageError("check: expected <h.pgf> [family.pgf...] <r.pgr>");
  pg::Pathograph h = load_pgf(h_path);
  if (!h.rungs.empty()) throw PreconditionError("check: the pathograph has a rung");
  std::vector<std::string> family_paths(rest.begin(), rest.end() - 1);
  std::vector<pg::Pathograph> family = load_family(family_paths);
  pg::PgrFile file = pg::parse_pgr(read_file(rest.back()));

  std::string why;
  auto r = pg::realization_from_pgr(h, file, &why);
  if (!r) {
    std::cout << "not a realization: " << why << "\n";
    return kNotRealization;
  }
  if (!pg::is_realization(h, *r, &why)) {
    std::cout << "not a realization: " << why << "\n";
    return kNotRealization;
  }

  pg::Dfa m = pg::build_decision_dfa(h, family);
  pg::DetString s = pg::determination_string(h, *r);
  std::vector<int> word = pg::symbol_ids(m.ab, s);
  bool accepted = false;
  long steps = pg::run_steps(m, word, &accepted);
  std::cout << "transitions: " << steps << "\n";
  std::cout << (accepted ? "family-free\n" : "contains a forbidden member\n");
  return accepted ? kYes : kNo;
}

int cmd_encode(const std::string& h_path, const std::string& relation, int max_size,
               const std::string& out_path) {
  pg::Pathograph target = load_pgf(h_path);
  if (target.urpath_count() != 0)
    throw PreconditionError("encode: the target must be a plain graph");
  auto family = pg::encoding_family(target, pg::relation_from_name(relation), max_size);
  write_output(out_path, write_pgf_multi(family));
  std::cout << "members: " << family.size() << "\n";
  return kYes;
}

int cmd_truemper(const std::string& which, const std::string& out_path) {
  std::vector<pg::Pathograph> family;
  if (which == "theta")
    family = pg::theta_family();
  else if (which == "pyramid")
    family = pg::pyramid_family();
  else if (which == "prism")
    family = pg::prism_family();
  else if (which == "wheel")
    family = pg::wheel_family();
  else if (which == "all")
    family = pg::truemper_family();
  else
    throw UsageError("truemper: expected theta, pyramid, prism, wheel, or all");
  write_output(out_path, write_pgf_multi(family));
  std::cout << "members: " << family.size() << "\n";
  return kYes;
}

int cmd_enumerate(const std::string& h_path, int max_internal, const std::string& out_path) {
  pg::Pathograph h = load_pgf(h_path);
  auto all = pg::enumerate_realizations(h, max_internal);
  std::ostringstream out;
  for (size_t i = 0; i < all.size(); ++i) {
    if (i) out << "---\n";
    out << pg::write_pgr(pg::realization_to_pgr(h, all[i]));
  }
  write_output(out_path, out.str());
  std::cout << "count: " << all.size() << "\n";
  return kYes;
}

int cmd_oracle(const std::string& h_path, const std::vector<std::string>& family_paths,
               int max_internal, const std::string& out_path) {
  pg::Pathograph h = load_pgf(h_path);
  std::vector<pg::Pathograph> family = load_family(family_paths);
  auto verdict = pg::decide_bounded(h, family, max_internal);
  if (!verdict.found) {
    std::cout << "unknown at bound " << max_internal << "\n";
    return kUnknown;
  }
  std::cout << "family-free realization exists\n";
  print_witness(h, *verdict.witness, out_path);
  return kYes;
}

void print_counts(const std::string& label, const std::vector<pg::CountedType>& counts) {
  std::cout << label << " family:";
  for (const auto& tc : counts)
    std::cout << " " << tc.label << "=" << pg::count_to_string(tc.count);
  std::cout << "\n";
}

void print_report(const pg::VerifyReport& rep) {
  for (const auto& line : rep.lines) std::cout << "verify: " << line << "\n";
  for (const auto& line : rep.skipped) std::cout << "skipped: " << line << "\n";
}

int cmd_reduce(const std::string& tiles_path, int stage, const std::string& bounds,
               const std::string& out_path) {
  if (stage < 1 || stage > 3) throw UsageError("reduce: stage must be 1, 2, or 3");
  pg::TileFile tf = pg::parse_tiles(read_file(tiles_path));
  pg::TilePatch patch;
  if (tf.patch) {
    patch = *tf.patch;
  } else if (tf.tiles.tiles.size() == 1) {
    patch.rows = patch.cols = 3;
    patch.tile.assign(3, std::vector<int>(3, 0));
  } else {
    throw PreconditionError("reduce: the tile file declares no patch");
  }

  pg::Stage1 s1 = pg::build_stage1(tf.tiles, patch);
  std::cout << "stage 1 source: vertices=" << s1.h.vertex_count()
            << " urpaths=" << s1.h.urpath_count() << " edges=" << s1.h.edges.size()
            << " spokes=" << s1.h.spokes.size() << " rungs=" << s1.h.rungs.size() << "\n";
  print_counts("stage 1", s1.type_counts);
  std::cout << "stage 1 family members: " << s1.family.size() << "\n";

  std::optional<pg::Stage2> s2;
  std::optional<pg::Stage3> s3;
  if (stage >= 2) {
    s2 = pg::build_stage2(s1);
    std::cout << "stage 2: K=" << s2->K << " source vertices=" << s2->h.p.vertex_count()
              << " spokes=" << s2->h.p.spokes.size() << "\n";
    print_counts("stage 2", s2->type_counts);
  }
  if (stage == 3) {
    s3 = pg::build_stage3(*s2);
    std::cout << "stage 3: K=" << s3->base.K << " source vertices=" << s3->h.vertex_count()
              << " spokes=" << s3->h.spokes.size() << "\n";
    print_counts("stage 3", s3->type_counts);
  }

  if (!out_path.empty()) {
    if (stage == 1)
      write_output(out_path, pg::write_stage1_pgf(s1));
    else if (stage == 2)
      write_output(out_path, pg::write_stage2_pgf(*s2));
    else
      write_output(out_path, pg::write_pgf(s3->h));
  }

  auto [a_max, b_max] = parse_bounds(bounds);
  auto tiling = pg::search_periodic_tiling(tf.tiles, a_max, b_max, &patch);
  if (!tiling) {
    std::cout << "no tiling within bounds " << a_max << "x" << b_max << "\n";
    return kUnknown;
  }
  std::cout << "tiling found: periods " << tiling->a << "x" << tiling->b << "\n";

  pg::VerifyReport rep;
  if (stage == 1) {
    rep = pg::verify_stage1_witness(s1, pg::stage1_witness(s1, *tiling));
  } else if (stage == 2) {
    rep = pg::verify_stage2_witness(*s2, pg::stage2_witness(*s2, *tiling));
  } else {
    rep = pg::verify_stage3_witness(*s3, pg::stage3_witness(*s3, *tiling));
  }
  print_report(rep);
  if (!rep.ok) throw std::logic_error("witness verification failed");
  std::cout << "witness verified\n";
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pathograph calculus toolkit"};
  app.require_subcommand(1);

  std::string h_path, out_path, mode = "auto", relation, truemper_name, bounds = "4x4";
  std::vector<std::string> files;
  int max_internal = 4, max_size = 8, stage = 1;

  auto* validate = app.add_subcommand("validate", "check a pathograph file");
  validate->add_option("pathograph", h_path)->required();

  auto* decide = app.add_subcommand("decide", "is there a family-free realization?");
  decide->add_option("pathograph", h_path)->required();
  decide->add_option("family", files, "forbidden family files (multi-PGF)");
  decide->add_option("--mode", mode)->check(CLI::IsMember({"auto", "rungless", "closed", "oracle"}));
  decide->add_option("--max-internal", max_internal, "oracle-mode bound");
  decide->add_option("--out", out_path, "write the witness PGR here");

  auto* characterize = app.add_subcommand("characterize", "DFA/regex of all family-free strings");
  characterize->add_option("pathograph", h_path)->required();
  characterize->add_option("family", files);
  characterize->add_option("--out", out_path, "write the DFA here");

  auto* check = app.add_subcommand("check", "single-pass check of one realization");
  check->add_option("pathograph", h_path)->required();
  check->add_option("files", files, "family files, then the realization PGR last")->required();

  auto* encode = app.add_subcommand("encode", "forbidden family encoding a pattern relation");
  encode->add_option("target", h_path)->required();
  encode->add_option("--relation", relation)
      ->required()
      ->check(CLI::IsMember({"subgraph", "induced-subgraph", "minor", "induced-minor",
                             "topological-minor", "induced-topological-minor"}));
  encode->add_option("--max-size", max_size, "member size cap (complete for hosts this size)");
  encode->add_option("--out", out_path);

  auto* truemper = app.add_subcommand("truemper", "classical configuration families");
  truemper->add_option("which", truemper_name)->required();
  truemper->add_option("--out", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "all realizations within a bound");
  enumerate->add_option("pathograph", h_path)->required();
  enumerate->add_option("--max-internal", max_internal);
  enumerate->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "bounded brute-force decision");
  oracle->add_option("pathograph", h_path)->required();
  oracle->add_option("family", files);
  oracle->add_option("--max-internal", max_internal);
  oracle->add_option("--out", out_path);

  auto* reduce = app.add_subcommand("reduce", "tiling-to-realization translation stages");
  reduce->add_option("tiles", h_path, "tile file")->required();
  reduce->add_option("--stage", stage)->check(CLI::Range(1, 3));
  reduce->add_option("--bounds", bounds, "tiling search bounds AxB");
  reduce->add_option("--out", out_path, "write the stage source PGF here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(h_path);
    if (decide->parsed()) return cmd_decide(h_path, files, mode, max_internal, out_path);
    if (characterize->parsed()) return cmd_characterize(h_path, files, out_path);
    if (check->parsed()) return cmd_check(h_path, files);
    if (encode->parsed()) return cmd_encode(h_path, relation, max_size, out_path);
    if (truemper->parsed()) return cmd_truemper(truemper_name, out_path);
    if (enumerate->parsed()) return cmd_enumerate(h_path, max_internal, out_path);
    if (oracle->parsed()) return cmd_oracle(h_path, files, max_internal, out_path);
    if (reduce->parsed()) return cmd_reduce(h_path, stage, bounds, out_path);
  } catch (const pg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kUsage;
}
