#pragma once

// Linear recurrences with constant coefficients over exact rationals:
// minimal annihilators, exact verification, bounded search for eventual
// recurrences, and a finite-window eventual periodicity detector.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monodeg/error.hpp"
#include "monodeg/exact.hpp"

namespace monodeg {

/// d_{n+m} + alpha_{m-1} d_{n+m-1} + ... + alpha_0 d_n = 0 for n >= valid_from
/// (1-based indices) within the window it was checked on.
struct Recurrence {
  std::vector<Rational> coefficients;  // alpha_0 .. alpha_{m-1}
  std::size_t valid_from = 1;

  std::size_t order() const noexcept { return coefficients.size(); }

  /// Monic characteristic polynomial, ascending, as rationals.
  std::vector<Rational> polynomial() const;

  /// The polynomial as an IntPoly when every coefficient is an integer.
  std::optional<IntPoly> integer_polynomial() const;

  static Recurrence from_polynomial(const IntPoly& monic);

  std::string to_string(char var = 'x') const;

  /// Same polynomial; valid_from is not compared.
  bool same_relation(const Recurrence& other) const;
};

/// Minimal-order recurrence for the whole window, or nullopt when that order
/// exceeds floor(len/2). An all-zero window yields the order-one relation
/// d_{n+1} = 0. Throws Error{InvalidArgument} for an empty window.
std::optional<Recurrence> berlekamp_massey(std::span<const Rational> seq);
std::optional<Recurrence> berlekamp_massey(std::span<const Integer> seq);

/// Least 1-based N such that the relation holds for every n in [N, len - m],
/// or nullopt when the satisfied suffix has fewer than 2m terms.
std::optional<std::size_t> verify_recurrence(std::span<const Integer> seq, const Recurrence& rec);

/// Bounded search for an eventual recurrence.
///
/// For each dropped head h in [0, max_order], the minimal recurrence of
/// seq[h, h + 2*max_order) is fitted and then checked exactly on `guard`
/// further terms. The least-order survivor wins (ties: smallest h). Throws
/// Error{WindowTooShort} when len < 2*max_order + guard.
std::optional<Recurrence> find_recurrence(std::span<const Integer> seq, std::size_t max_order,
                                          std::size_t guard);

/// Treats the monic polynomial p as a recurrence and returns its least valid
/// offset, as verify_recurrence. Throws Error{InvalidArgument} if p is not
/// monic of positive degree or seq is shorter than deg p + 2.
std::optional<std::size_t> check_candidate(std::span<const Integer> seq, const IntPoly& p);

struct Periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

/// Smallest period p (then smallest preperiod) such that symbols[0, window) is
/// p-periodic from the preperiod on, with at least two full periods and at
/// least half the window inside the periodic tail. Periods above max_period
/// (default window / 2) are not considered.
template <class T>
std::optional<Periodicity> eventually_periodic(std::span<const T> symbols, std::size_t window,
                                               std::size_t max_period = 0) {
  if (window > symbols.size()) {
    throw Error(ErrorCode::InvalidArgument, "periodicity window exceeds the sequence length");
  }
  if (window < 2) return std::nullopt;
  const std::size_t half = (window + 1) / 2;
  const std::size_t limit = max_period ? std::min(max_period, window / 2) : window / 2;
  for (std::size_t p = 1; p <= limit; ++p) {
    std::size_t pre = window - p;
    while (pre > 0 && symbols[pre - 1] == symbols[pre - 1 + p]) --pre;
    const std::size_t tail = window - pre;
    if (tail >= 2 * p && tail >= half) return Periodicity{pre, p};
  }
  return std::nullopt;
}

template <class T>
std::optional<Periodicity> eventually_periodic(const std::vector<T>& symbols, std::size_t window,
                                               std::size_t max_period = 0) {
  return eventually_periodic(std::span<const T>(symbols), window, max_period);
}

}  // namespace monodeg
