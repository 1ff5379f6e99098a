#pragma once

#include <vector>

#include "monodeg/exact.hpp"
#include "monodeg/spectra.hpp"

namespace monodeg::detail {

/// Incremental root isolation for one squarefree polynomial.
///
/// Approximations come from Aberth iteration in fixed-point integer arithmetic
/// (deterministic, no global floating-point state). They are only hints: the
/// boxes are certified afterwards with exact rationals by the inclusion
/// theorem for Weierstrass corrections, which puts one root in each of the
/// disks D(z_i, d |W_i|) when those disks are pairwise disjoint, where
///   W_i = p(z_i) / (lc(p) prod_{j != i} (z_i - z_j)).
class Isolator {
 public:
  /// p squarefree of degree >= 1 (not checked here).
  explicit Isolator(IntPoly p);

  /// Certified boxes with radius <= 2^-bits. Later calls with a larger
  /// target continue from the current approximations.
  const std::vector<RootBox>& boxes(unsigned bits);

  const IntPoly& poly() const noexcept { return p_; }

 private:
  struct Fixed {
    Integer re, im;
  };

  void seed(unsigned work);
  void iterate();
  bool certify(unsigned bits);

  IntPoly p_;
  std::size_t n_;
  unsigned work_ = 0;  // approximations are z_ / 2^work_
  std::vector<Fixed> z_;
  unsigned separation_bits_ = 0;  // -log2 of the separation lower bound, rounded up
  bool certified_ = false;
  unsigned certified_bits_ = 0;
  std::vector<RootBox> boxes_;
};

}  // namespace monodeg::detail
