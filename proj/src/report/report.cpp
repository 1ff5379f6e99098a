#include "monodeg/report.hpp"

#include <cctype>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "monodeg/error.hpp"
#include "spectra/ball.hpp"

namespace monodeg {

using nlohmann::json;

namespace {

// --- input ------------------------------------------------------------------

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& s) : s_(s) {}

  std::vector<std::vector<Integer>> rows() {
    std::vector<std::vector<Integer>> out;
    expect('[');
    if (peek() == ']') {
      ++i_;
      finish();
      return out;
    }
    for (;;) {
      out.push_back(row());
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect(']');
      break;
    }
    finish();
    return out;
  }

 private:
  std::vector<Integer> row() {
    std::vector<Integer> r;
    expect('[');
    if (peek() == ']') {
      ++i_;
      return r;
    }
    for (;;) {
      r.push_back(integer());
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect(']');
      return r;
    }
  }

  Integer integer() {
    peek();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) fail("expected an integer");
    std::string text = s_.substr(start, i_ - start);
    if (text[0] == '+') text.erase(0, 1);
    return Integer(text, 10);
  }

  char peek() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  void finish() {
    if (peek() != '\0') fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(i_));
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

Integer entry(const json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()), 10)
                                  : Integer(std::to_string(v.get<std::int64_t>()), 10);
  }
  if (v.is_string()) {
    try {
      return integer_from_string(v.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "matrix entry \"" + v.get<std::string>() + "\" is not an integer");
    }
  }
  throw Error(ErrorCode::ParseError, "matrix entries must be integers or decimal strings, got " + v.dump());
}

// --- JSON building ----------------------------------------------------------

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }

json integers(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(str(z));
  return a;
}

json input_json(const IntMatrix& a) {
  json rows = json::array();
  for (const auto& r : a.rows()) rows.push_back(integers(r));
  return {{"dim", a.dim()}, {"matrix", rows}};
}

json poly_json(const IntPoly& p) { return integers(p.coeffs()); }

json root_json(const SpectralSummary& s, std::size_t i, int digits) {
  const RootBox& b = s.roots[i];
  json j{
      {"box", b.to_string(digits)},
      {"center", {{"re", str(b.center.re)}, {"im", str(b.center.im)}}},
      {"radius", str(b.radius)},
      {"radius_bound", detail::scientific_upper(b.radius)},
      {"multiplicity", b.multiplicity},
      {"real", b.is_real},
      {"partner", b.conjugate_partner ? json(*b.conjugate_partner) : json(nullptr)},
  };
  const auto c = s.class_of(i);
  j["class"] = c ? json(*c) : json(nullptr);
  if (b.is_real) {
    j["sign"] = s.real_sign(i);
    j["ratio"] = nullptr;
  } else {
    j["ratio"] = s.ratio_flags[i].to_string();
  }
  return j;
}

json spectrum_json(const SpectralSummary& s, int digits) {
  json roots = json::array();
  for (std::size_t i = 0; i < s.roots.size(); ++i) roots.push_back(root_json(s, i, digits));
  json classes = json::array();
  for (const auto& c : s.modulus_classes) {
    classes.push_back({{"members", c.members},
                       {"vs_one", to_string(c.vs_one)},
                       {"cyclotomic", c.cyclotomic},
                       {"modulus_sq", {str(c.modulus_sq_lo), str(c.modulus_sq_hi)}}});
  }
  json dominant = nullptr;
  if (s.dominant_pair) dominant = {s.dominant_pair->first, s.dominant_pair->second};
  return {{"precision_bits", s.precision_bits},
          {"digits", digits},
          {"squarefree", poly_json(s.squarefree)},
          {"roots", roots},
          {"classes", classes},
          {"classes_resolved", s.classes_resolved},
          {"resolved", s.resolved()},
          {"dominant_pair", dominant},
          {"unity_orders", s.unity_orders}};
}

json recurrence_body(const Recurrence& r) {
  json coeffs = json::array();
  for (const auto& q : r.polynomial()) coeffs.push_back(str(q));
  return {{"polynomial", coeffs}, {"order", r.order()}, {"valid_from", r.valid_from}, {"display", r.to_string()}};
}

json search_json(const SearchResult& s) {
  json j{{"found", s.found.has_value()},
         {"bounds", {{"max_order", s.max_order}, {"window", s.window}, {"guard", s.guard}}}};
  if (s.found) j.update(recurrence_body(*s.found));
  return j;
}

json verdict_details(const Verdict& v, int digits) {
  json eig = json::array();
  for (std::size_t i : v.eigenvalues) eig.push_back({{"index", i}, {"box", v.spectrum.roots[i].to_string(digits)}});
  return {{"reason", v.reason},
          {"eigenvalues", eig},
          {"tau", v.tau},
          {"unit_modulus", v.unit_modulus},
          {"recurrence", v.recurrence ? poly_json(*v.recurrence) : json(nullptr)},
          {"recurrence_display", v.recurrence ? json(v.recurrence->to_string()) : json(nullptr)},
          {"spectrum", spectrum_json(v.spectrum, digits)}};
}

json basis_json(const std::optional<Basis>& b) { return b ? json(to_string(*b)) : json(nullptr); }

// {"d1", "basis", "details", "dual"}
json verdicts_json(const Verdict& d1, const std::optional<Verdict>& dual, int digits) {
  json d = nullptr;
  if (dual) {
    d = {{"classification", to_string(dual->classification)},
         {"basis", basis_json(dual->basis)},
         {"underlying", basis_json(dual->underlying)},
         {"details", verdict_details(*dual, digits)}};
  }
  return {{"d1", to_string(d1.classification)},
          {"basis", basis_json(d1.basis)},
          {"details", verdict_details(d1, digits)},
          {"dual", d}};
}

json cells_body(const CellTrace& t) {
  json trace = json::array();
  for (std::size_t n = 0; n < t.cells.size(); ++n) {
    trace.push_back({{"n", n + 1}, {"cell", t.cells[n].index.choices}, {"ties", t.cells[n].tie_count}});
  }
  const TraceVerdict& v = t.verdict;
  return {{"window", t.window()},
          {"status", to_string(v.status)},
          {"period", v.period},
          {"from_index", v.from_index},
          {"cell", v.cell ? json(v.cell->choices) : json(nullptr)},
          {"switch_indices", t.switch_indices},
          {"trace", trace}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- text helpers -----------------------------------------------------------

std::string joined(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& z : v) s += (s.empty() ? "" : " ") + str(z);
  return s;
}

template <class T>
std::string listed(const std::vector<T>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s.empty() ? "none" : s;
}

std::string bounds_text(const SearchResult& s) {
  return "max_order " + std::to_string(s.max_order) + ", window " + std::to_string(s.window) + ", guard " +
         std::to_string(s.guard);
}

void spectrum_text(std::ostream& os, const SpectralSummary& s, int digits) {
  os << "spectrum: " << s.roots.size() << " distinct eigenvalues, certified boxes (radius cap 2^-" << s.precision_bits
     << ")" << (s.resolved() ? "" : " UNRESOLVED") << "\n";
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    const RootBox& b = s.roots[i];
    os << "  l" << i << " = " << b.to_string(digits) << "  mult " << b.multiplicity;
    if (auto c = s.class_of(i)) os << "  class " << *c << " (" << to_string(s.modulus_classes[*c].vs_one) << " 1)";
    if (!b.is_real) os << "  conj(l)/l " << s.ratio_flags[i].to_string();
    os << "\n";
  }
  for (std::size_t c = 0; c < s.modulus_classes.size(); ++c) {
    const ModulusClass& m = s.modulus_classes[c];
    os << "  class " << c << ": |l|^2 in [" << detail::to_decimal(m.modulus_sq_lo, digits) << ", "
       << detail::to_decimal(m.modulus_sq_hi, digits) << "]" << (m.cyclotomic ? ", cyclotomic" : "") << "\n";
  }
  os << "  unity orders of conj(l)/l: " << listed(s.unity_orders) << "\n";
}

void verdict_block(std::ostream& os, const std::string& label, const Verdict& v) {
  os << label << ": " << to_string(v.classification);
  if (v.basis) {
    os << " [" << to_string(*v.basis);
    if (v.underlying) os << " via " << to_string(*v.underlying);
    os << "]";
  }
  os << "\n  reason: " << v.reason << "\n";
  if (v.recurrence) os << "  recurrence: " << v.recurrence->to_string() << " (tau " << v.tau << ")\n";
  if (v.unit_modulus) os << "  note: an eigenvalue has modulus 1; the d1 / d_{k-1} dichotomy is not guaranteed\n";
}

std::string dual_label(std::size_t k) { return "d" + std::to_string(k - 1) + " via A^-1"; }

}  // namespace

// --- input ------------------------------------------------------------------

IntMatrix parse_matrix_literal(const std::string& text) {
  return IntMatrix::from_rows(LiteralParser(text).rows());
}

IntMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  // reports nest the matrix under "input", so they can be fed back in
  if (doc.is_object() && !doc.contains("matrix") && doc.contains("input")) doc = doc["input"];
  if (!doc.is_object() || !doc.contains("matrix")) throw Error(ErrorCode::ParseError, path + ": no \"matrix\" field");
  const json& m = doc["matrix"];
  if (!m.is_array()) throw Error(ErrorCode::ParseError, path + ": \"matrix\" is not an array");
  std::vector<std::vector<Integer>> rows;
  for (const json& r : m) {
    if (!r.is_array()) throw Error(ErrorCode::ParseError, path + ": matrix row is not an array");
    std::vector<Integer> row;
    for (const json& v : r) row.push_back(entry(v));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

IntMatrix parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_matrix_literal(text);
  if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty input");
  return parse_matrix_file(text);
}

std::string matrix_literal(const IntMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < a.dim(); ++j) s += (j ? "," : "") + str(a(i, j));
    s += "]";
  }
  return s + "]";
}

// --- analyses ---------------------------------------------------------------

std::size_t AnalysisOptions::resolved_max_order(const IntMatrix& a) const {
  const std::size_t m = max_order.value_or(2 * a.dim() * a.dim());
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "max-order must be positive");
  return m;
}

std::size_t AnalysisOptions::resolved_guard(const IntMatrix& a) const {
  return guard.value_or(4 * resolved_max_order(a));
}

std::size_t AnalysisOptions::search_window(const IntMatrix& a) const {
  return std::max(terms, 2 * resolved_max_order(a) + resolved_guard(a));
}

SearchResult search_recurrence(const IntMatrix& a, const AnalysisOptions& opts) {
  SearchResult s;
  s.max_order = opts.resolved_max_order(a);
  s.guard = opts.resolved_guard(a);
  s.window = opts.search_window(a);
  const auto seq = degree_sequence(a, s.window).terms;
  s.found = find_recurrence(seq, s.max_order, s.guard);
  return s;
}

AnalysisReport analyze(const IntMatrix& a, const AnalysisOptions& opts) {
  if (opts.terms == 0) throw Error(ErrorCode::InvalidArgument, "terms must be positive");
  require_full_rank(a);
  AnalysisReport r;
  r.input = a;
  r.digits = opts.digits;
  r.search.max_order = opts.resolved_max_order(a);
  r.search.guard = opts.resolved_guard(a);
  r.search.window = opts.search_window(a);

  auto check = [&] {
    return cross_check(a, r.search.window, r.search.max_order, r.search.guard, opts.precision_bits);
  };
  auto dual = [&]() -> std::optional<Verdict> {
    // d_0 of a 1x1 matrix is constant, nothing to classify
    if (a.dim() < 2 || !is_unimodular(a)) return std::nullopt;
    return classify_dual(a, opts.precision_bits);
  };
  if (opts.parallel) {
    auto pending = std::async(std::launch::async, dual);
    r.consistency = check();
    r.dual = pending.get();
  } else {
    r.consistency = check();
    r.dual = dual();
  }

  r.det = det(a);
  r.d1 = r.consistency.verdict;
  r.char_poly = r.d1.spectrum.char_poly;
  r.sequence.assign(r.consistency.sequence.begin(), r.consistency.sequence.begin() + opts.terms);
  r.search.found = r.consistency.found;
  r.cells = r.consistency.trace;
  return r;
}

// --- renderings -------------------------------------------------------------

std::string analysis_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "matrix: " << matrix_literal(r.input) << "\n";
  os << "det: " << str(r.det) << "\n";
  os << "char_poly: " << r.char_poly.to_string() << "\n";
  spectrum_text(os, r.d1.spectrum, r.digits);
  os << "sequence (" << r.sequence.size() << " terms): " << joined(r.sequence) << "\n";
  os << recurrence_text(r.search);
  verdict_block(os, "d1", r.d1);
  if (r.dual) verdict_block(os, dual_label(r.input.dim()), *r.dual);
  os << cells_text(r.cells);
  const ConsistencyReport& c = r.consistency;
  os << "consistency: " << to_string(c.status) << "\n";
  for (const auto& e : c.evidence) os << "  - " << e << "\n";
  return os.str();
}

std::string analysis_json(const AnalysisReport& r) {
  const ConsistencyReport& c = r.consistency;
  json consistency{{"status", to_string(c.status)},
                   {"attached_offset", c.attached_offset ? json(*c.attached_offset) : json(nullptr)},
                   {"attached_window", c.attached_window},
                   {"evidence", c.evidence}};
  json verdicts = verdicts_json(r.d1, r.dual, r.digits);
  json spectrum = verdicts["details"]["spectrum"];
  verdicts["details"].erase("spectrum");
  return dump({{"input", input_json(r.input)},
               {"det", str(r.det)},
               {"char_poly", poly_json(r.char_poly)},
               {"spectrum", spectrum},
               {"sequence", integers(r.sequence)},
               {"recurrence", search_json(r.search)},
               {"verdicts", verdicts},
               {"cells", cells_body(r.cells)},
               {"consistency", consistency}});
}

std::string sequence_text(const std::vector<Integer>& seq) { return joined(seq) + "\n"; }

std::string sequence_json(const IntMatrix& a, const std::vector<Integer>& seq) {
  return dump({{"input", input_json(a)}, {"sequence", integers(seq)}});
}

std::string sequence_csv(const std::vector<Integer>& seq) {
  std::string s = "n,degree\n";
  for (std::size_t n = 0; n < seq.size(); ++n) s += std::to_string(n + 1) + "," + str(seq[n]) + "\n";
  return s;
}

std::string recurrence_text(const SearchResult& s) {
  if (!s.found) return "recurrence: NONE (" + bounds_text(s) + ")\n";
  return "recurrence: " + s.found->to_string() + ", valid from n = " + std::to_string(s.found->valid_from) + " (" +
         bounds_text(s) + ")\n";
}

std::string recurrence_json(const IntMatrix& a, const SearchResult& s) {
  return dump({{"input", input_json(a)}, {"recurrence", search_json(s)}});
}

std::string verdict_text(const Verdict& d1, const std::optional<Verdict>& dual, int digits) {
  std::ostringstream os;
  spectrum_text(os, d1.spectrum, digits);
  verdict_block(os, "d1", d1);
  if (dual) verdict_block(os, dual_label(static_cast<std::size_t>(d1.spectrum.char_poly.degree())), *dual);
  return os.str();
}

std::string verdict_json(const IntMatrix& a, const Verdict& d1, const std::optional<Verdict>& dual, int digits) {
  json j = verdicts_json(d1, dual, digits);
  j["input"] = input_json(a);
  return dump(j);
}

std::string cells_text(const CellTrace& t) {
  std::ostringstream os;
  const TraceVerdict& v = t.verdict;
  os << "cells: " << to_string(v.status);
  if (v.status == TraceStatus::Periodic) os << "(" << v.period << ")";
  if (v.status != TraceStatus::Unresolved) os << " from n = " << v.from_index;
  if (v.cell) os << " in cell " << v.cell->to_string();
  os << " over " << t.window() << " terms, " << t.switch_indices.size() << " switches\n";
  if (!t.switch_indices.empty()) os << "  switches at n = " << listed(t.switch_indices) << "\n";
  return os.str();
}

std::string cells_json(const IntMatrix& a, const CellTrace& t) {
  return dump({{"input", input_json(a)}, {"cells", cells_body(t)}});
}

std::string canonical_json(const std::string& document) { return dump(json::parse(document)); }

}  // namespace monodeg
