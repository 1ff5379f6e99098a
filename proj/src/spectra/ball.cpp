#include "spectra/ball.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monodeg::detail {

ComplexRational divide(const ComplexRational& a, const ComplexRational& b) {
  const Rational n = norm2(b);
  if (n == 0) throw std::domain_error("complex division by zero");
  const ComplexRational t = a * conj(b);
  return {t.re / n, t.im / n};
}

ComplexRational eval(const IntPoly& p, const ComplexRational& z) {
  ComplexRational acc{Rational(0), Rational(0)};
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * z;
    acc.re += c[i];
  }
  return acc;
}

Rational ldexp(const Rational& q, long e) {
  Rational r;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

namespace {

// Scale exponent e with q * 4^e of roughly 2*bits bits.
long sqrt_scale(const Rational& q, unsigned bits) {
  const long num_bits = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  return static_cast<long>(bits) - (num_bits - den_bits) / 2 + 1;
}

}  // namespace

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt of a negative rational");
  if (q == 0) return 0;
  const long e = sqrt_scale(q, bits);
  const Rational scaled = ldexp(q, 2 * e);
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (s * s < n) s += 1;
  return ldexp(Rational(s), -e);
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt of a negative rational");
  if (q == 0) return 0;
  const long e = sqrt_scale(q, bits);
  const Rational scaled = ldexp(q, 2 * e);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return ldexp(Rational(s), -e);
}

bool meets_segment(const Disk& d, const Rational& lo, const Rational& hi) {
  Rational dx = 0;
  if (d.center.re < lo) dx = lo - d.center.re;
  if (d.center.re > hi) dx = d.center.re - hi;
  return dx * dx + d.center.im * d.center.im <= d.radius * d.radius;
}

std::optional<std::size_t> unique_meeting(const Disk& region, const std::vector<Disk>& disks) {
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < disks.size(); ++j) {
    if (!meets(region, disks[j])) continue;
    if (hit) return std::nullopt;
    hit = j;
  }
  return hit;
}

std::optional<std::size_t> unique_meeting_segment(const Rational& lo, const Rational& hi,
                                                  const std::vector<Disk>& disks) {
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < disks.size(); ++j) {
    if (!meets_segment(disks[j], lo, hi)) continue;
    if (hit) return std::nullopt;
    hit = j;
  }
  return hit;
}

std::vector<Disk> disks_of(const std::vector<RootBox>& boxes) {
  std::vector<Disk> out;
  out.reserve(boxes.size());
  for (const auto& b : boxes) out.push_back(disk_of(b));
  return out;
}

std::pair<Rational, Rational> modulus_squared_bounds(const Disk& d) {
  // |z|^2 within (|c| -+ r)^2; a loose u >= |c| only widens the interval by O(r)
  const Rational c2 = norm2(d.center);
  const Rational slack = 2 * d.radius * sqrt_upper(c2, 32);
  const Rational lo = c2 - slack;
  return {lo > 0 ? lo : Rational(0), c2 + slack + d.radius * d.radius};
}

}  // namespace monodeg::detail

namespace monodeg::detail {

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

std::string to_decimal(const Rational& q, int digits) {
  const Integer scale = pow10(static_cast<unsigned long>(digits));
  // round half away from zero
  Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
  Integer den = q.get_den() * 2;
  Integer units;
  mpz_fdiv_q(units.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string s = units.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (q < 0 && units != 0) s.insert(0, "-");
  return s;
}

std::string scientific_upper(const Rational& q) {
  if (q <= 0) return "0";
  // find e with 10 <= q * 10^(1-e) < 100, i.e. two significant digits
  long e = static_cast<long>(std::floor(
      (static_cast<double>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
       static_cast<double>(mpz_sizeinbase(q.get_den_mpz_t(), 2))) * 0.30102999566398120));
  auto scaled = [&q](long ex) {
    Rational s = q;
    if (ex > 0) s /= Rational(pow10(static_cast<unsigned long>(ex)));
    if (ex < 0) s *= Rational(pow10(static_cast<unsigned long>(-ex)));
    return s;
  };
  while (scaled(e - 1) >= 100) ++e;
  while (scaled(e - 1) < 10) --e;
  const Rational s = scaled(e - 1);
  Integer m;
  mpz_cdiv_q(m.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  if (m == 100) {
    m = 10;
    ++e;
  }
  const std::string digits = m.get_str();
  return digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
}

}  // namespace monodeg::detail
