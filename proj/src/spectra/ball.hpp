#pragma once

// Exact complex rationals and disks with rational centre and radius.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monodeg/exact.hpp"
#include "monodeg/spectra.hpp"

namespace monodeg::detail {

inline ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
  return {a.re + b.re, a.im + b.im};
}
inline ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
  return {a.re - b.re, a.im - b.im};
}
inline ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexRational conj(const ComplexRational& a) { return {a.re, -a.im}; }
inline Rational norm2(const ComplexRational& a) { return a.re * a.re + a.im * a.im; }

/// Throws std::domain_error on division by zero.
ComplexRational divide(const ComplexRational& a, const ComplexRational& b);

ComplexRational eval(const IntPoly& p, const ComplexRational& z);

/// Dyadic bounds with about `bits` significant bits: lower <= sqrt(q) <= upper.
Rational sqrt_upper(const Rational& q, unsigned bits = 64);
Rational sqrt_lower(const Rational& q, unsigned bits = 64);

/// q * 2^e for signed e.
Rational ldexp(const Rational& q, long e);

struct Disk {
  ComplexRational center;
  Rational radius;
};

inline bool meets(const Disk& a, const Disk& b) {
  const Rational reach = a.radius + b.radius;
  return norm2(a.center - b.center) <= reach * reach;
}

inline bool contains(const Disk& d, const ComplexRational& z) {
  return norm2(d.center - z) <= d.radius * d.radius;
}

/// Whether the real segment [lo, hi] meets the disk.
bool meets_segment(const Disk& d, const Rational& lo, const Rational& hi);

/// Index of the single disk in `disks` that meets `region`, if exactly one does.
std::optional<std::size_t> unique_meeting(const Disk& region, const std::vector<Disk>& disks);
std::optional<std::size_t> unique_meeting_segment(const Rational& lo, const Rational& hi,
                                                  const std::vector<Disk>& disks);

inline Disk disk_of(const RootBox& b) { return {b.center, b.radius}; }
std::vector<Disk> disks_of(const std::vector<RootBox>& boxes);

/// Interval certain to contain |z|^2 for every z in the disk.
std::pair<Rational, Rational> modulus_squared_bounds(const Disk& d);

}  // namespace monodeg::detail

namespace monodeg::detail {

/// q rounded to `digits` decimals, e.g. "-0.771844506346".
std::string to_decimal(const Rational& q, int digits);

/// Upper bound for q > 0 with two significant digits, e.g. "3.2e-71".
std::string scientific_upper(const Rational& q);

}  // namespace monodeg::detail
