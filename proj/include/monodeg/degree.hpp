#pragma once

// Degree of a monomial map from its exponent matrix, the family of linear
// functionals whose pointwise maximum is that degree, and degree sequences of
// iterates.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "monodeg/exact.hpp"

namespace monodeg {

/// One branch choice per maximum in the degree formula.
///
/// choices[0] selects the row-sum term (0 is the constant zero branch, i picks
/// the sum of row i); choices[j] for j = 1..k selects the column-j term (0 is
/// zero, i picks -a_{i,j}). Ordering is lexicographic with choices[0] most
/// significant.
struct FunctionalIndex {
  std::vector<unsigned> choices;

  std::size_t dim() const noexcept { return choices.size() - 1; }
  unsigned row_choice() const { return choices[0]; }
  unsigned column_choice(std::size_t j) const { return choices[j]; }
  std::string to_string() const;

  friend auto operator<=>(const FunctionalIndex&, const FunctionalIndex&) = default;
};

/// All (k+1)^(k+1) indices in lexicographic order.
std::vector<FunctionalIndex> functional_set(std::size_t k);

/// Throws Error{DimensionMismatch} or Error{InvalidArgument} for an index
/// whose components are out of range.
Integer functional_value(const FunctionalIndex& c, const IntMatrix& a);

/// max(0, row sums) + sum over columns of max(0, -a_{i,j}). Throws
/// Error{InvalidArgument} for the zero matrix.
Integer degree(const IntMatrix& a);

/// Lexicographically least achieving index together with the number of
/// achieving indices. The achieving set is a product of per-maximum argmax
/// sets, so neither needs enumeration.
struct CanonicalCell {
  FunctionalIndex index;
  std::size_t tie_count = 0;
};
CanonicalCell canonical_cell(const IntMatrix& a);

/// Every C with L_C(A) = D(A), sorted. Never empty for a nonzero matrix.
std::vector<FunctionalIndex> achieving_cells(const IntMatrix& a);

struct DegreeSequence {
  std::vector<Integer> terms;  // terms[n-1] = D(B^n)
  IntMatrix source;            // the matrix A supplied by the caller
  bool dual = false;           // true when B = A^{-1}
};

/// Throws Error{RankDeficient} for singular A and Error{InvalidArgument} for
/// length == 0.
DegreeSequence degree_sequence(const IntMatrix& a, std::size_t length);

/// Degree sequence of the inverse, i.e. the codimension k-1 degrees of f_A.
/// Throws Error{NotUnimodular}.
DegreeSequence dual_degree_sequence(const IntMatrix& a, std::size_t length);

/// Rejects singular matrices at analysis entry points.
void require_full_rank(const IntMatrix& a);

}  // namespace monodeg
