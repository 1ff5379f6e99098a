#pragma once

// Certified spectral data of an integer matrix.
//
// Roots are enclosed in disks with rational centre and radius; every decision
// (realness, equal moduli, comparison with 1, whether a ratio of eigenvalues
// is a root of unity) is either certified by exact arithmetic or reported as
// unresolved. Nothing is decided by a floating-point comparison.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodeg/exact.hpp"

namespace monodeg {

/// Radius cap used when no precision is given: boxes are refined down to
/// 2^-kDefaultPrecisionBits before anything is reported unresolved.
inline constexpr unsigned kDefaultPrecisionBits = 256;

struct ComplexRational {
  Rational re;
  Rational im;

  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

struct RootBox {
  ComplexRational center;
  Rational radius;
  unsigned multiplicity = 1;
  bool is_real = false;
  std::optional<std::size_t> conjugate_partner;

  /// "center ± radius" with `digits` decimals.
  std::string to_string(int digits = 12) const;
};

struct SquarefreeDecomposition {
  IntPoly part;  // primitive, positive leading coefficient
  // Yun factors (f, e): p = c * prod f^e with f squarefree and pairwise coprime.
  std::vector<std::pair<IntPoly, unsigned>> factors;

  /// Multiplicity in p of a root of `part` that is a root of factor i.
  unsigned multiplicity_of_factor(std::size_t i) const { return factors[i].second; }
};

/// Throws Error{InvalidArgument} for p = 0.
SquarefreeDecomposition squarefree_part(const IntPoly& p);

/// Lower bound on sep(p)^2, the squared minimum distance between distinct
/// roots, for squarefree p of degree >= 2 (Mahler):
///   sep^2 > 3 / (d^(d+2) * ||p||_2^(2(d-1))).
/// Returns 1 for degree 1.
Rational separation_bound_squared(const IntPoly& p);

/// One box per distinct root, pairwise disjoint, radius <= eps, realness and
/// conjugate pairing certified. Each box contains exactly one root.
/// Throws Error{InvalidArgument} when p has degree < 1, is not squarefree, or
/// eps <= 0.
std::vector<RootBox> isolate_roots(const IntPoly& p, const Rational& eps);

enum class UnitComparison { Greater, Equal, Less };

const char* to_string(UnitComparison c) noexcept;

struct ModulusClass {
  std::vector<std::size_t> members;  // indices into the root list
  UnitComparison vs_one = UnitComparison::Less;
  bool cyclotomic = false;  // modulus 1 certified by a cyclotomic factor
  // |lambda|^2 lies in [modulus_sq_lo, modulus_sq_hi] for every member
  Rational modulus_sq_lo;
  Rational modulus_sq_hi;
};

struct ModulusPartition {
  std::vector<RootBox> roots;
  std::vector<ModulusClass> classes;  // strictly decreasing modulus
};

/// For squarefree p with p(0) != 0. Throws Error{UnresolvedClass} when the
/// matching is still ambiguous at radius 2^-precision_bits, and
/// Error{InvalidArgument} when p is not squarefree or p(0) = 0.
ModulusPartition modulus_classes(const IntPoly& p, unsigned precision_bits = kDefaultPrecisionBits);

/// Q(z) = Res_y(p(y), y^d p(z/y)), whose roots are the products lambda_i lambda_j.
IntPoly product_polynomial(const IntPoly& p);

struct RatioPolynomials {
  IntPoly full;     // Res_y(p(y), p(xy)), degree k^2, roots lambda_i / lambda_j
  IntPoly reduced;  // full / (x - 1)^k
};

/// Throws Error{InvalidArgument} if p(0) = 0 or deg p < 1.
RatioPolynomials ratio_polynomial(const IntPoly& p);

/// Ascending m with phi(m) <= k^2 and gcd(reduced, Phi_m) != 1.
std::vector<unsigned long> unity_ratio_orders(const IntPoly& p);

enum class RatioKind { RootOfUnity, NotRootOfUnity, Unresolved };

struct RatioFlag {
  RatioKind kind = RatioKind::Unresolved;
  unsigned long order = 0;  // set for RootOfUnity

  std::string to_string() const;
  friend bool operator==(const RatioFlag&, const RatioFlag&) = default;
};

struct SpectralSummary {
  IntPoly char_poly;
  IntPoly squarefree;
  std::vector<RootBox> roots;          // distinct eigenvalues
  std::vector<ModulusClass> modulus_classes;  // empty when unresolved
  bool classes_resolved = false;
  std::optional<std::pair<std::size_t, std::size_t>> dominant_pair;
  std::vector<RatioFlag> ratio_flags;  // one per root: conj(lambda)/lambda
  std::vector<unsigned long> unity_orders;  // unity_ratio_orders(char_poly)
  unsigned precision_bits = kDefaultPrecisionBits;

  /// Classes and every ratio flag decided.
  bool resolved() const;
  /// Index of the class containing root i, if classes are resolved.
  std::optional<std::size_t> class_of(std::size_t root) const;
  /// Certified sign of a real root: +1, -1, or 0 when the box straddles 0.
  int real_sign(std::size_t root) const;
};

/// Throws Error{RankDeficient} for singular A.
/// The precision cap bounds the smallest radius tried; refinement climbs a
/// fixed ladder of targets up to it, so results are reproducible.
SpectralSummary spectral_summary(const IntMatrix& a, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace monodeg
