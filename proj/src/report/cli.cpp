#include "monodeg/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "monodeg/error.hpp"
#include "monodeg/report.hpp"

namespace monodeg {

namespace {

struct Flags {
  std::string matrix;
  std::string file;
  std::size_t terms = 40;
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> guard;
  unsigned precision = kDefaultPrecisionBits;
  std::string format = "text";
  bool strict = false;
  bool parallel = false;
};

void add_common(CLI::App* cmd, Flags& f, bool csv) {
  auto* m = cmd->add_option("-m,--matrix", f.matrix, "matrix literal, e.g. [[-1,1,0],[-1,0,1],[1,0,0]]");
  auto* file = cmd->add_option("-f,--file", f.file, "JSON file with a \"matrix\" field");
  m->excludes(file);
  cmd->add_option("-n,--terms", f.terms, "sequence terms to report")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--max-order", f.max_order, "largest recurrence order searched (default 2k^2)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--guard", f.guard, "extra terms each fitted recurrence must satisfy (default 4 * max-order)");
  cmd->add_option("--precision", f.precision, "root boxes are refined down to 2^-precision")
      ->capture_default_str()
      ->check(CLI::Range(8u, 1u << 16));
  std::vector<std::string> formats{"text", "json"};
  if (csv) formats.push_back("csv");
  cmd->add_option("--format", f.format, "output format")->capture_default_str()->check(CLI::IsMember(formats));
  cmd->add_flag("--strict", f.strict, "exit 4 when a certification is unresolved");
  cmd->add_flag("--parallel", f.parallel, "run independent analyses concurrently");
}

AnalysisOptions options(const Flags& f) {
  AnalysisOptions o;
  o.terms = f.terms;
  o.max_order = f.max_order;
  o.guard = f.guard;
  o.precision_bits = f.precision;
  o.parallel = f.parallel;
  return o;
}

IntMatrix input(const Flags& f) {
  if (!f.file.empty()) return parse_matrix_file(f.file);
  if (f.matrix.empty()) throw Error(ErrorCode::ParseError, "one of --matrix or --file is required");
  return parse_matrix(f.matrix);
}

bool unresolved(const Verdict& d1, const std::optional<Verdict>& dual) {
  return !d1.spectrum.resolved() || (dual && !dual->spectrum.resolved());
}

std::optional<Verdict> dual_verdict(const IntMatrix& a, unsigned bits) {
  if (a.dim() < 2 || !is_unimodular(a)) return std::nullopt;
  return classify_dual(a, bits);
}

int execute(const std::string& command, const Flags& f, std::ostream& out) {
  const IntMatrix a = input(f);
  const AnalysisOptions opts = options(f);
  const bool json = f.format == "json";

  if (command == "sequence") {
    const auto seq = degree_sequence(a, f.terms).terms;
    out << (json ? sequence_json(a, seq) : f.format == "csv" ? sequence_csv(seq) : sequence_text(seq));
    return kExitOk;
  }
  if (command == "recurrence") {
    const SearchResult s = search_recurrence(a, opts);
    out << (json ? recurrence_json(a, s) : recurrence_text(s));
    return kExitOk;
  }
  if (command == "cells") {
    const CellTrace t = cell_trace(a, std::max<std::size_t>(f.terms, 2));
    out << (json ? cells_json(a, t) : cells_text(t));
    return kExitOk;
  }
  if (command == "verdict") {
    require_full_rank(a);
    const Verdict d1 = classify_d1(a, f.precision);
    const auto dual = dual_verdict(a, f.precision);
    out << (json ? verdict_json(a, d1, dual) : verdict_text(d1, dual));
    return f.strict && unresolved(d1, dual) ? kExitUnresolved : kExitOk;
  }
  const AnalysisReport r = analyze(a, opts);
  out << (json ? analysis_json(r) : analysis_text(r));
  if (r.consistency.status == Consistency::Inconsistent) return kExitInconsistent;
  return f.strict && unresolved(r.d1, r.dual) ? kExitUnresolved : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree sequences of monomial maps and their linear recurrences", "monodeg"};
  app.require_subcommand(1);
  Flags f;
  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"analyze", "full report: spectrum, sequence, recurrence search, verdicts, cells, consistency"},
      {"sequence", "degree sequence d_1(A^n), n = 1..terms"},
      {"recurrence", "bounded search for an eventual linear recurrence"},
      {"verdict", "theorem-backed classification of d_1 (and d_{k-1} when unimodular)"},
      {"cells", "which degree cell holds A^n"},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c.name, c.help), f, std::string(c.name) == "sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::UnresolvedClass ? (f.strict ? kExitUnresolved : kExitInternal) : kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace monodeg
