#pragma once

// Matrix input, whole-matrix analyses and their text / JSON / CSV renderings.
// JSON is canonical: keys sorted, integers and rationals as decimal strings,
// so re-parsing and re-dumping reproduces the bytes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monodeg/cells.hpp"
#include "monodeg/degree.hpp"
#include "monodeg/recur.hpp"
#include "monodeg/spectra.hpp"
#include "monodeg/verdict.hpp"

namespace monodeg {

/// Nested-bracket literal such as "[[-1,1,0],[-1,0,1],[1,0,0]]", or else a
/// path to a JSON file {"matrix": [[...], ...]} whose entries are integers or
/// decimal strings. Throws Error{ParseError}, Error{NotSquare}, Error{Empty}.
IntMatrix parse_matrix(const std::string& text);

/// The literal form only; never touches the filesystem.
IntMatrix parse_matrix_literal(const std::string& text);

/// JSON file with a "matrix" field, or a JSON report of this library (whose
/// "input" holds one). Throws Error{ParseError} when unreadable.
IntMatrix parse_matrix_file(const std::string& path);

/// "[[-1,1,0],[-1,0,1],[1,0,0]]"
std::string matrix_literal(const IntMatrix& a);

struct AnalysisOptions {
  std::size_t terms = 40;
  std::optional<std::size_t> max_order;  // default 2k^2
  std::optional<std::size_t> guard;      // default 4 * max_order
  unsigned precision_bits = kDefaultPrecisionBits;
  bool parallel = false;
  int digits = 12;  // decimals shown for root boxes

  std::size_t resolved_max_order(const IntMatrix& a) const;
  std::size_t resolved_guard(const IntMatrix& a) const;
  /// Terms needed by the recurrence search: max(terms, 2 * max_order + guard).
  std::size_t search_window(const IntMatrix& a) const;
};

struct SearchResult {
  std::optional<Recurrence> found;
  std::size_t max_order = 0;
  std::size_t window = 0;
  std::size_t guard = 0;
};

struct AnalysisReport {
  IntMatrix input{1};
  Integer det;
  IntPoly char_poly;
  std::vector<Integer> sequence;  // the requested terms
  SearchResult search;
  Verdict d1;
  std::optional<Verdict> dual;  // only for unimodular input
  CellTrace cells;              // traced over the search window
  ConsistencyReport consistency;
  int digits = 12;
};

/// Throws Error{RankDeficient} and whatever the components raise.
AnalysisReport analyze(const IntMatrix& a, const AnalysisOptions& opts = {});

SearchResult search_recurrence(const IntMatrix& a, const AnalysisOptions& opts = {});

// Renderings. Each JSON function returns a complete document.
std::string analysis_text(const AnalysisReport& r);
std::string analysis_json(const AnalysisReport& r);

std::string sequence_text(const std::vector<Integer>& seq);
std::string sequence_json(const IntMatrix& a, const std::vector<Integer>& seq);
std::string sequence_csv(const std::vector<Integer>& seq);

std::string recurrence_text(const SearchResult& s);
std::string recurrence_json(const IntMatrix& a, const SearchResult& s);

std::string verdict_text(const Verdict& d1, const std::optional<Verdict>& dual, int digits = 12);
std::string verdict_json(const IntMatrix& a, const Verdict& d1, const std::optional<Verdict>& dual,
                         int digits = 12);

std::string cells_text(const CellTrace& t);
std::string cells_json(const IntMatrix& a, const CellTrace& t);

/// Canonical re-dump of a JSON document (parse, then dump as the renderers do).
std::string canonical_json(const std::string& document);

}  // namespace monodeg
