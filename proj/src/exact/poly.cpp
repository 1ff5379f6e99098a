#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "bareiss.hpp"
#include "monodeg/error.hpp"
#include "monodeg/exact.hpp"

namespace monodeg {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t deg) {
  std::vector<Integer> v(deg + 1);
  v[deg] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Integer IntPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
  return r;
}

std::string IntPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    Integer mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool operator==(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.c_.size() != rhs.c_.size()) return false;
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    if (lhs.c_[i] != rhs.c_[i]) return false;
  }
  return true;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> r(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& s, const IntPoly& a) {
  std::vector<Integer> r(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
  return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> r(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) r[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& a : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_divexact(r[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int top = a.degree(); top >= db; --top) {
    Integer lead = r[static_cast<std::size_t>(top)];
    for (auto& v : r) v *= lb;
    if (lead != 0) {
      for (int i = 0; i <= db; ++i) {
        r[static_cast<std::size_t>(top - db + i)] -= lead * b.coeffs()[static_cast<std::size_t>(i)];
      }
    }
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("exact_div: divisor does not divide");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int top = a.degree(); top >= db; --top) {
    Integer& lead = r[static_cast<std::size_t>(top)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t())) {
      throw std::logic_error("exact_div: divisor does not divide");
    }
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(top - db + i)] -= qc * b.coeffs()[static_cast<std::size_t>(i)];
    }
    q[static_cast<std::size_t>(top - db)] = qc;
  }
  for (int i = 0; i < db; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) throw std::logic_error("exact_div: nonzero remainder");
  }
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (b.degree() == 0 || a.is_zero()) return true;
  return pseudo_remainder(a, b).is_zero();
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly reversal(const IntPoly& p) {
  std::vector<Integer> r(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(r));
}

IntPoly poly_pow(const IntPoly& p, unsigned n) {
  IntPoly r = IntPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic(unsigned long m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  static std::shared_mutex mutex;
  static std::map<unsigned long, IntPoly> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 = prod_{d | m} Phi_d
  std::vector<Integer> c(m + 1);
  c[0] = -1;
  c[m] = 1;
  IntPoly phi(std::move(c));
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d == 0) phi = exact_div(phi, cyclotomic(d));
  }
  std::unique_lock lock(mutex);
  return cache.emplace(m, std::move(phi)).first->second;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t ydeg(const YPoly& f) {
  std::size_t d = f.size();
  while (d > 0 && f[d - 1].is_zero()) --d;
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "resultant of a polynomial that is zero in y");
  return d - 1;
}

}  // namespace

IntPoly resultant_in_y(const YPoly& f, const YPoly& g) {
  const std::size_t m = ydeg(f);
  const std::size_t n = ydeg(g);
  const std::size_t size = m + n;
  if (size == 0) return IntPoly::constant(1);
  // Sylvester matrix, descending powers of y along each row.
  std::vector<std::vector<IntPoly>> s(size, std::vector<IntPoly>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  return detail::bareiss_det(
      std::move(s), IntPoly::constant(1),
      [](const IntPoly& num, const IntPoly& den) { return exact_div(num, den); },
      [](const IntPoly& v) { return v.is_zero(); });
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  YPoly fy, gy;
  for (const auto& c : f.coeffs()) fy.push_back(IntPoly::constant(c));
  for (const auto& c : g.coeffs()) gy.push_back(IntPoly::constant(c));
  return resultant_in_y(fy, gy).coeff(0);
}

}  // namespace monodeg
