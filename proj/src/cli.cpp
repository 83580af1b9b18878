#include "neumann/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "neumann/distant_graph.hpp"
#include "neumann/errors.hpp"
#include "neumann/neumann.hpp"
#include "neumann/structure.hpp"

namespace neumann::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_row(std::ostream& os, const IntMat2& m) {
  os << m.a() << ' ' << m.b() << ' ' << m.c() << ' ' << m.d();
}

std::string coset_label(const CosetDecomposition& d) {
  return "tau^" + d.n.get_str() + (d.kind == CosetKind::TauPowerNu ? " nu" : "");
}

int cmd_validate(std::ostream& out, const InvolutionWindow& w, bool dump) {
  const ValidationReport r = validate(w);
  out << "window " << w.lo() << ".." << w.hi() << " (" << w.size() << " points)\n";
  for (Index n : r.involution_failures) out << "involution-failure " << n << '\n';
  for (Index n : r.delta_failures) out << "delta-failure " << n << '\n';
  for (const auto* list : {&r.iota_failures, &r.iota_minus_failures}) {
    for (const IotaFailure& f : *list) {
      out << "iota-failure n=" << f.n << " eps=" << f.eps << " lhs=" << f.lhs
          << " rhs=" << f.rhs << '\n';
    }
  }
  out << "iota checked " << r.iota_checked << " skipped " << r.iota_skipped << '\n'
      << "iota(eps=-1) checked " << r.iota_minus_checked << " skipped "
      << r.iota_minus_skipped << '\n';
  if (dump) write_window(out, w);
  out << (r.ok() ? "valid" : "invalid") << '\n';
  return r.ok() ? kExitOk : kExitFailed;
}

int cmd_generators(std::ostream& out, const InvolutionWindow& w) {
  for (Index n = w.lo(); n <= w.hi(); ++n) {
    out << n << ' ' << w.iota(n) << ' ' << w.delta(n) << ' ';
    write_row(out, sigma_matrix(w, n));
    out << '\n';
  }
  return kExitOk;
}

int cmd_neumann(std::ostream& out, const InvolutionWindow& w, std::int64_t H,
                std::optional<int> oracle_len) {
  const NeumannReport r = check_neumann(w, H, oracle_len);
  out << "height_bound " << r.height_bound << '\n'
      << "oracle_len " << r.oracle_len << '\n'
      << "oracle_ball " << r.oracle_ball_size << '\n'
      << "targets " << r.targets_checked << '\n';
  bool hard_failure = false;
  for (const NeumannFailure& f : r.failures) {
    out << "failure " << f.vertex.label() << ' ' << to_string(f.reason) << ' '
        << f.detail << '\n';
    if (f.reason != FailureReason::OutOfWindow) hard_failure = true;
  }
  out << "# uniqueness is checked inside the enumerated ball only\n";
  out << "verified " << (r.verified ? "yes" : "no") << '\n';
  if (r.verified) return kExitOk;
  return hard_failure ? kExitFailed : kExitIncomplete;
}

int cmd_coset(std::ostream& out, const InvolutionWindow& w, std::int64_t H) {
  std::size_t ok = 0;
  bool incomplete = false;
  bool failed = false;
  for (const ProjMat2& g : elements_up_to_height(H)) {
    out << "g ";
    write_row(out, g.rep());
    try {
      const CosetDecomposition d = coset_decompose(w, g);
      const bool exact = compose(d.s, d.t) == g;
      out << " s ";
      write_row(out, d.s.rep());
      out << " t " << coset_label(d) << (exact ? "" : " MISMATCH") << '\n';
      if (exact) {
        ++ok;
      } else {
        failed = true;
      }
    } catch (const OutOfWindow& e) {
      out << " OutOfWindow " << e.index() << '\n';
      incomplete = true;
    } catch (const NotInCoset& e) {
      out << " NotInCoset\n";
      failed = true;
    }
  }
  out << "decomposed " << ok << '\n';
  if (failed) return kExitFailed;
  return incomplete ? kExitIncomplete : kExitOk;
}

int cmd_structure(std::ostream& out, const std::vector<int>& cases) {
  const StructureReport r = structure_report(cases);
  write_structure_report(out, r);
  return r.constraint2 && r.constraint3 ? kExitOk : kExitFailed;
}

int cmd_independence(std::ostream& out, const InvolutionWindow& w, int max_len) {
  bool failed = false;
  for (const BuildingBlock& block : w.provenance().blocks) {
    const auto designated = independent_generators(w, block);
    std::vector<ClassifiedGenerator> gens;
    out << "block " << block.case_id << " k=" << block.base << " generators";
    for (const DesignatedGenerator& g : designated) {
      out << ' ' << g.index << ':' << to_string(g.cls);
      if (!g.matches()) {
        out << "(expected " << to_string(g.expected) << ")";
        failed = true;
      }
      gens.push_back({sigma(w, g.index), g.cls});
    }
    const bool independent = check_independence(gens, max_len);
    if (!independent) failed = true;
    out << " independent(L=" << max_len << ") " << (independent ? "yes" : "no")
        << '\n';
    for (const TietzeCheck& t : check_tietze(block, w)) {
      out << "  tietze " << t.identity << ' ' << (t.holds ? "holds" : "fails")
          << '\n';
      if (!t.holds && block.case_id != 6) failed = true;
    }
  }
  return failed ? kExitFailed : kExitOk;
}

int cmd_graph(std::ostream& out, std::int64_t H, const std::string& format) {
  const DistantGraph g = build(H);
  if (format == "dot") {
    write_dot(out, g);
  } else {
    write_adjacency(out, g);
  }
  return kExitOk;
}

int cmd_iso(std::ostream& out, const InvolutionWindow& w, std::int64_t H) {
  const IsoReport r = cayley_vs_distant_report(w, H);
  out << "vertices " << r.vertices << '\n'
      << "edges_matched " << r.edges_matched << '\n';
  if (!r.ok) out << "mismatch " << r.mismatch << '\n';
  out << "isomorphic " << (r.ok ? "yes" : "no") << '\n';
  return r.ok ? kExitOk : kExitFailed;
}

int cmd_synthesize(std::ostream& out, const StructureCounts& targets, int pad,
                   std::size_t n_blocks) {
  const SynthesisResult s = synthesize_blocks(targets, pad, n_blocks);
  out << "# targets r2 " << targets.r2 << " r3 " << targets.r3 << " rinf_plus "
      << targets.rinf_plus << " rinf_minus " << targets.rinf_minus << '\n'
      << "# the first " << s.exact_prefix
      << " blocks realize the targets; the rest pad with case " << pad << '\n';
  for (int c : s.cases) out << "block " << c << '\n';
  return kExitOk;
}

}  // namespace

std::vector<int> parse_spec(std::string_view text) {
  std::vector<int> cases;
  std::size_t line_no = 0;
  for (std::string_view raw : lines_of(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    std::string keyword;
    int case_id = 0;
    std::string rest;
    if (!(in >> keyword >> case_id) || keyword != "block" || (in >> rest) ||
        case_id < 1 || case_id > 6) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected `block <1-6>`, got `" + std::string(line) + "`");
    }
    cases.push_back(case_id);
  }
  if (cases.empty()) throw ParseError("spec file lists no blocks");
  return cases;
}

std::vector<int> read_spec_file(const std::filesystem::path& path) {
  return parse_spec(read_file(path));
}

void write_window(std::ostream& os, const InvolutionWindow& w) {
  for (Index n = w.lo(); n <= w.hi(); ++n) {
    os << n << ' ' << w.iota(n) << ' ' << w.delta(n) << '\n';
  }
}

InvolutionWindow parse_window(std::string_view text) {
  std::map<Index, std::pair<Index, int>> rows;
  std::size_t line_no = 0;
  for (std::string_view raw : lines_of(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    Index n = 0, image = 0;
    int delta = 0;
    std::string rest;
    if (!(in >> n >> image >> delta) || (in >> rest) || (delta != 1 && delta != -1) ||
        !rows.emplace(n, std::make_pair(image, delta)).second) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected `n iota delta` with delta = +-1 and unique n");
    }
  }
  if (rows.empty()) throw ParseError("window file has no rows");
  const Index lo = rows.begin()->first;
  std::vector<Index> iota;
  std::vector<int> delta;
  for (const auto& [n, row] : rows) {
    if (n != lo + static_cast<Index>(iota.size())) {
      throw ParseError("window rows are not contiguous at n=" + std::to_string(n));
    }
    iota.push_back(row.first);
    delta.push_back(row.second);
  }
  return {lo, std::move(iota), std::move(delta)};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construction and verification kit for Neumann subgroups of PGL(2,Z)",
               "neumann"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string window_path;
  std::int64_t height = 0;
  int oracle_len = 0;
  int max_len = 8;
  std::string format = "dot";
  bool dump = false;
  StructureCounts targets;
  int pad = 3;
  std::size_t n_blocks = 1;

  auto* validate_cmd = app.add_subcommand("validate", "assemble and validate a spec");
  auto* spec_opt = validate_cmd->add_option("--spec", spec_path, "block spec file");
  auto* window_opt = validate_cmd->add_option("--window", window_path,
                                              "serialized window (n iota delta rows)");
  spec_opt->excludes(window_opt);
  validate_cmd->add_flag("--dump", dump, "print the serialized window");

  auto* generators_cmd = app.add_subcommand("generators", "list sigma_n matrices");
  generators_cmd->add_option("--spec", spec_path)->required();

  auto* neumann_cmd = app.add_subcommand("neumann-check", "height-bounded Neumann check");
  neumann_cmd->add_option("--spec", spec_path)->required();
  neumann_cmd->add_option("--height", height)->required()->check(CLI::PositiveNumber);
  auto* oracle_opt = neumann_cmd->add_option("--oracle-len", oracle_len)
                         ->check(CLI::NonNegativeNumber);

  auto* coset_cmd = app.add_subcommand("coset-check", "coset decompositions against <tau, nu>");
  coset_cmd->add_option("--spec", spec_path)->required();
  coset_cmd->add_option("--height", height)->required()->check(CLI::PositiveNumber);

  auto* structure_cmd = app.add_subcommand("structure", "free-product structure report");
  structure_cmd->add_option("--spec", spec_path)->required();

  auto* independence_cmd =
      app.add_subcommand("independence", "per-block generator independence and eliminations");
  independence_cmd->add_option("--spec", spec_path)->required();
  independence_cmd->add_option("--max-len", max_len)->check(CLI::PositiveNumber);

  auto* graph_cmd = app.add_subcommand("graph", "export the height-bounded distant graph");
  graph_cmd->add_option("--height", height)->required()->check(CLI::PositiveNumber);
  graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "adj"}));

  auto* iso_cmd = app.add_subcommand("iso-check", "Cayley graph versus distant graph");
  iso_cmd->add_option("--spec", spec_path)->required();
  iso_cmd->add_option("--height", height)->required()->check(CLI::PositiveNumber);

  auto* synth_cmd = app.add_subcommand("synthesize", "emit a spec realizing a structure");
  synth_cmd->add_option("--r2", targets.r2)->required()->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--r3", targets.r3)->required()->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--rinfp", targets.rinf_plus)->required()->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--rinfm", targets.rinf_minus)->required()->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--pad", pad)->check(CLI::Range(1, 6));
  synth_cmd->add_option("--blocks", n_blocks)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    auto load = [&]() { return assemble(read_spec_file(spec_path)); };
    if (validate_cmd->parsed()) {
      if (!window_path.empty()) {
        return cmd_validate(out, parse_window(read_file(window_path)), dump);
      }
      if (spec_path.empty()) {
        err << "validate needs --spec or --window\n";
        return kExitUsage;
      }
      return cmd_validate(out, load(), dump);
    }
    if (generators_cmd->parsed()) return cmd_generators(out, load());
    if (neumann_cmd->parsed()) {
      std::optional<int> len;
      if (oracle_opt->count() > 0) len = oracle_len;
      return cmd_neumann(out, load(), height, len);
    }
    if (coset_cmd->parsed()) return cmd_coset(out, load(), height);
    if (structure_cmd->parsed()) return cmd_structure(out, read_spec_file(spec_path));
    if (independence_cmd->parsed()) return cmd_independence(out, load(), max_len);
    if (graph_cmd->parsed()) return cmd_graph(out, height, format);
    if (iso_cmd->parsed()) return cmd_iso(out, load(), height);
    if (synth_cmd->parsed()) return cmd_synthesize(out, targets, pad, n_blocks);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TooFewBlocks& e) {
    err << "too few blocks: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfWindow& e) {
    err << "window too small: " << e.what() << '\n';
    return kExitIncomplete;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace neumann::cli
