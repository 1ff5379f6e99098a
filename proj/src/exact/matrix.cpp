#include <sstream>

#include "bareiss.hpp"
#include "monodeg/error.hpp"
#include "monodeg/exact.hpp"

namespace monodeg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotUnimodular: return "NOT_UNIMODULAR";
    case ErrorCode::RankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::WindowTooShort: return "WINDOW_TOO_SHORT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::NotSquare: return "NOT_SQUARE";
    case ErrorCode::Empty: return "EMPTY";
    case ErrorCode::UnresolvedClass: return "UNRESOLVED_CLASS";
  }
  return "UNKNOWN_ERROR";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer integer_from_string(const std::string& text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + text + "'");
  }
  return z;
}

IntMatrix::IntMatrix(std::size_t k) : k_(k), a_(k * k) {
  if (k == 0) throw Error(ErrorCode::Empty, "matrix dimension must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != k_) throw Error(ErrorCode::NotSquare, "row length differs from row count");
    std::size_t j = 0;
    for (long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::Empty, "matrix has no rows");
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a_) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> IntMatrix::rows() const {
  std::vector<std::vector<Integer>> out(k_);
  for (std::size_t i = 0; i < k_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < k_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < k_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.k_ != rhs.k_) return false;
  for (std::size_t i = 0; i < lhs.a_.size(); ++i) {
    if (lhs.a_[i] != rhs.a_[i]) return false;
  }
  return true;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = -a(i, j);
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
  return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + std::to_string(a.dim()) + "x" +
                                                  std::to_string(a.dim()) + " by " +
                                                  std::to_string(b.dim()) + "x" +
                                                  std::to_string(b.dim()));
  }
  const std::size_t k = a.dim();
  IntMatrix r(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const Integer& ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < k; ++j) r(i, j) += ail * b(l, j);
    }
  }
  return r;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long n) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (n) {
    if (n & 1UL) result = mat_mul(result, base);
    n >>= 1;
    if (n) base = mat_mul(base, base);
  }
  return result;
}

Integer trace(const IntMatrix& a) {
  Integer t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

Integer det(const IntMatrix& a) {
  std::vector<std::vector<Integer>> m = a.rows();
  return detail::bareiss_det(
      std::move(m), Integer(1),
      [](const Integer& num, const Integer& den) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
      },
      [](const Integer& v) { return v == 0; });
}

namespace {

// Faddeev-LeVerrier: M_1 = I, c_{k-1} = -tr(A); M_i = A M_{i-1} + c_{k-i+1} I,
// c_{k-i} = -tr(A M_i) / i. Returns the coefficients and M_k, which satisfies
// A M_k = -c_0 I.
std::pair<std::vector<Integer>, IntMatrix> faddeev_leverrier(const IntMatrix& a) {
  const std::size_t k = a.dim();
  std::vector<Integer> c(k + 1);
  c[k] = 1;
  IntMatrix m(k);  // M_0 = 0
  for (std::size_t i = 1; i <= k; ++i) {
    m = mat_mul(a, m);
    for (std::size_t d = 0; d < k; ++d) m(d, d) += c[k - i + 1];
    Integer t = trace(mat_mul(a, m));
    Integer q;
    Integer idx(static_cast<unsigned long>(i));
    mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), idx.get_mpz_t());
    c[k - i] = -q;
  }
  return {std::move(c), std::move(m)};
}

}  // namespace

IntPoly char_poly(const IntMatrix& a) { return IntPoly(faddeev_leverrier(a).first); }

bool is_unimodular(const IntMatrix& a) {
  Integer d = det(a);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  auto [c, m] = faddeev_leverrier(a);
  if (c[0] != 1 && c[0] != -1) {
    throw Error(ErrorCode::NotUnimodular,
                "determinant " + Integer(abs(c[0])).get_str() + " is not a unit");
  }
  // A^{-1} = -M_k / c_0 and c_0 = +-1.
  return Integer(-c[0]) * m;
}

IntMatrix poly_at_matrix(const IntPoly& p, const IntMatrix& a) {
  IntMatrix r(a.dim());
  for (int i = p.degree(); i >= 0; --i) {
    r = mat_mul(r, a);
    for (std::size_t d = 0; d < a.dim(); ++d) r(d, d) += p.coeff(static_cast<std::size_t>(i));
  }
  return r;
}

}  // namespace monodeg
