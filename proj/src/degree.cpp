#include "monodeg/degree.hpp"

#include <algorithm>
#include <sstream>

#include "monodeg/error.hpp"

namespace monodeg {

std::string FunctionalIndex::to_string() const {
  std::ostringstream os;
  os << '(' << choices[0] << ';';
  for (std::size_t j = 1; j < choices.size(); ++j) os << (j == 1 ? " " : ",") << choices[j];
  os << ')';
  return os.str();
}

std::vector<FunctionalIndex> functional_set(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  std::vector<FunctionalIndex> out;
  FunctionalIndex c{std::vector<unsigned>(k + 1, 0)};
  for (;;) {
    out.push_back(c);
    // odometer, last component fastest
    std::size_t pos = k + 1;
    while (pos > 0) {
      --pos;
      if (c.choices[pos] < k) {
        ++c.choices[pos];
        break;
      }
      c.choices[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

Integer functional_value(const FunctionalIndex& c, const IntMatrix& a) {
  const std::size_t k = a.dim();
  if (c.choices.size() != k + 1) {
    throw Error(ErrorCode::DimensionMismatch, "functional index " + c.to_string() +
                                                  " does not match dimension " + std::to_string(k));
  }
  for (unsigned v : c.choices) {
    if (v > k) throw Error(ErrorCode::InvalidArgument, "functional index component out of range");
  }
  Integer value = 0;
  if (unsigned r = c.row_choice(); r != 0) {
    for (const auto& x : a.row(r - 1)) value += x;
  }
  for (std::size_t j = 1; j <= k; ++j) {
    if (unsigned i = c.column_choice(j); i != 0) value -= a(i - 1, j - 1);
  }
  return value;
}

Integer degree(const IntMatrix& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "degree of the zero matrix");
  const std::size_t k = a.dim();
  Integer first = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Integer s = 0;
    for (const auto& x : a.row(i)) s += x;
    if (s > first) first = s;
  }
  Integer cols = 0;
  for (std::size_t j = 0; j < k; ++j) {
    Integer m = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (-a(i, j) > m) m = -a(i, j);
    }
    cols += m;
  }
  return first + cols;
}

namespace {

// argmax sets of each maximum, candidates listed in increasing choice order
std::vector<std::vector<unsigned>> argmax_sets(const IntMatrix& a) {
  const std::size_t k = a.dim();
  std::vector<std::vector<unsigned>> sets(k + 1);
  {
    std::vector<Integer> cand(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& x : a.row(i)) cand[i + 1] += x;
    Integer best = *std::max_element(cand.begin(), cand.end());
    for (unsigned i = 0; i <= k; ++i)
      if (cand[i] == best) sets[0].push_back(i);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Integer> cand(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) cand[i + 1] = -a(i, j);
    Integer best = *std::max_element(cand.begin(), cand.end());
    for (unsigned i = 0; i <= k; ++i)
      if (cand[i] == best) sets[j + 1].push_back(i);
  }
  return sets;
}

}  // namespace

CanonicalCell canonical_cell(const IntMatrix& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "cells of the zero matrix");
  auto sets = argmax_sets(a);
  CanonicalCell out;
  out.tie_count = 1;
  for (const auto& s : sets) {
    out.index.choices.push_back(s.front());
    out.tie_count *= s.size();
  }
  return out;
}

std::vector<FunctionalIndex> achieving_cells(const IntMatrix& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "cells of the zero matrix");
  auto sets = argmax_sets(a);
  std::vector<FunctionalIndex> out{FunctionalIndex{}};
  for (const auto& s : sets) {
    std::vector<FunctionalIndex> next;
    for (const auto& prefix : out) {
      for (unsigned v : s) {
        FunctionalIndex c = prefix;
        c.choices.push_back(v);
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;  // already lexicographic: each set is ascending
}

void require_full_rank(const IntMatrix& a) {
  if (det(a) == 0) throw Error(ErrorCode::RankDeficient, "matrix " + a.to_string() + " is singular");
}

DegreeSequence degree_sequence(const IntMatrix& a, std::size_t length) {
  require_full_rank(a);
  if (length == 0) throw Error(ErrorCode::InvalidArgument, "sequence length must be positive");
  DegreeSequence seq{{}, a, false};
  seq.terms.reserve(length);
  IntMatrix power = a;
  for (std::size_t n = 1; n <= length; ++n) {
    if (n > 1) power = mat_mul(power, a);
    seq.terms.push_back(degree(power));
  }
  return seq;
}

DegreeSequence dual_degree_sequence(const IntMatrix& a, std::size_t length) {
  IntMatrix inv = inverse_unimodular(a);
  DegreeSequence seq = degree_sequence(inv, length);
  seq.source = a;
  seq.dual = true;
  return seq;
}

}  // namespace monodeg
