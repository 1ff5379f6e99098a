#pragma once

// Exact arithmetic kernel: GMP-backed integers and rationals, square integer
// matrices and univariate integer polynomials.
//
// Nothing in here touches machine-width arithmetic for values; sizes and
// indices are the only std::size_t quantities.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monodeg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den (den != 0); the result has positive denominator
/// and coprime parts.
Rational make_rational(const Integer& num, const Integer& den);

Integer integer_from_string(const std::string& text);

// ---------------------------------------------------------------------------
// IntMatrix

class IntMatrix {
 public:
  /// Zero matrix of dimension k (k >= 1).
  explicit IntMatrix(std::size_t k);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Throws Error{Empty} for no rows and Error{NotSquare} for ragged or
  /// non-square input.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t k);

  std::size_t dim() const noexcept { return k_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * k_ + j]; }

  std::span<const Integer> row(std::size_t i) const {
    return {a_.data() + i * k_, k_};
  }

  bool is_zero() const;
  std::vector<std::vector<Integer>> rows() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs);

 private:
  std::size_t k_;
  std::vector<Integer> a_;
};

IntMatrix operator-(const IntMatrix& a);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, const IntMatrix& a);

/// Throws Error{DimensionMismatch}.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_pow(const IntMatrix& a, unsigned long n);
Integer trace(const IntMatrix& a);

/// Bareiss fraction-free elimination; every intermediate division is exact.
Integer det(const IntMatrix& a);

class IntPoly;

/// det(tI - A) by Faddeev-LeVerrier. The division by i at step i is exact over
/// the integers, so no rational ever appears.
IntPoly char_poly(const IntMatrix& a);

/// Inverse of a matrix in GL(k, Z). Throws Error{NotUnimodular} if |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

// ---------------------------------------------------------------------------
// IntPoly

/// Dense univariate integer polynomial, ascending coefficients, no trailing
/// zeros. The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const Integer& c, std::size_t deg);
  static IntPoly constant(const Integer& c) { return monomial(c, 0); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }

  /// Coefficient of t^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  bool is_monic() const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  std::string to_string(char var = 't') const;

  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& s, const IntPoly& a);
  friend IntPoly operator-(const IntPoly& a);

 private:
  void normalize();
  std::vector<Integer> c_;
};

IntPoly derivative(const IntPoly& p);

/// gcd of the coefficients, non-negative; zero for the zero polynomial.
Integer content(const IntPoly& p);

/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// a / b when b divides a in Z[t]; throws std::logic_error otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// true when b divides a in Q[t].
bool divides(const IntPoly& b, const IntPoly& a);

/// Primitive gcd over Q with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

/// t^deg(p) * p(1/t).
IntPoly reversal(const IntPoly& p);

IntPoly poly_pow(const IntPoly& p, unsigned n);

/// Horner evaluation with matrix argument.
IntMatrix poly_at_matrix(const IntPoly& p, const IntMatrix& a);

unsigned long euler_phi(unsigned long m);

/// m-th cyclotomic polynomial. Results are cached process-wide; the cache is
/// safe for concurrent readers and idempotent concurrent fills.
IntPoly cyclotomic(unsigned long m);

// ---------------------------------------------------------------------------
// Resultants

/// Polynomial in y whose coefficients are integer polynomials in x; index i
/// holds the coefficient of y^i.
using YPoly = std::vector<IntPoly>;

/// Res_y(f, g) as a polynomial in x.
///
/// Convention: the determinant of the Sylvester matrix with the rows of f
/// first, so that Res_y(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots
/// alpha of f. Both inputs must be nonzero in y.
IntPoly resultant_in_y(const YPoly& f, const YPoly& g);

/// Univariate resultant with the same convention.
Integer resultant(const IntPoly& f, const IntPoly& g);

}  // namespace monodeg
