#pragma once

// Theorem-backed classification of degree sequences.
//
// H1: every eigenvalue of modulus >= 1 is real or has conj(l)/l a root of
//     unity => the degree sequence satisfies a linear recurrence.
// H2: the eigenvalues of maximum modulus are exactly one simple non-real pair
//     whose ratio conj(l)/l is not a root of unity => no linear recurrence.
// Anything else, including any undecided certification, is UNKNOWN.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monodeg/cells.hpp"
#include "monodeg/degree.hpp"
#include "monodeg/recur.hpp"
#include "monodeg/spectra.hpp"

namespace monodeg {

enum class Classification { RecurrenceProven, NoRecurrenceProven, Unknown };

enum class Basis {
  Thm11Part1,      // unity ratios for every |l| >= 1
  Thm27CharPoly,   // same, with every |l| >= 1 real and positive
  Prop31,          // single dominant non-real pair, ratio not a root of unity
  DualityThm12,    // d_{k-1}(A) = d_1(A^-1), k = 3
  DualityThm13,    // same, k = 4
  Duality,         // same, other k
};

const char* to_string(Classification c) noexcept;
const char* to_string(Basis b) noexcept;

struct Verdict {
  Classification classification = Classification::Unknown;
  std::optional<Basis> basis;       // empty for UNKNOWN
  std::optional<Basis> underlying;  // for dual verdicts: basis applied to A^-1
  std::string reason;
  // Indices into spectrum.roots of the eigenvalues whose certified facts
  // fired the verdict (or blocked it, for UNKNOWN).
  std::vector<std::size_t> eigenvalues;
  SpectralSummary spectrum;  // of the matrix actually classified
  // Attached recurrence: the sequence eventually satisfies p(E) d = 0 where E
  // is the shift. For the char-poly basis tau = 1 and p = chi_A; otherwise
  // p(t) = chi_{A^tau}(t^tau) with tau the lcm of per-eigenvalue periods.
  std::optional<IntPoly> recurrence;
  unsigned long tau = 1;
  bool dual = false;
  // Some eigenvalue has modulus exactly 1. The forward / dual dichotomy for
  // unimodular k = 3, 4 assumes there is none, so it is not guaranteed here.
  bool unit_modulus = false;
};

/// Throws Error{RankDeficient}.
Verdict classify_d1(const IntMatrix& a, unsigned precision_bits = kDefaultPrecisionBits);
Verdict classify_d1(const IntMatrix& a, SpectralSummary spectrum);

/// Verdict on d_{k-1}(A^n) = d_1(A^-n). Throws Error{NotUnimodular}.
Verdict classify_dual(const IntMatrix& a, unsigned precision_bits = kDefaultPrecisionBits);

enum class Consistency { Consistent, Inconsistent };

const char* to_string(Consistency c) noexcept;

struct ConsistencyReport {
  Consistency status = Consistency::Consistent;
  Verdict verdict;
  std::vector<Integer> sequence;  // d_1(A^n), n = 1..window
  std::size_t max_order = 0;
  std::size_t guard = 0;
  std::optional<Recurrence> found;
  // Offset from which the verdict's attached recurrence holds, and the window
  // it was checked on (see cross_check).
  std::optional<std::size_t> attached_offset;
  std::size_t attached_window = 0;
  CellTrace trace;
  std::vector<std::string> evidence;
};

/// Default guard: window - 2 * max_order, all of the remaining terms.
///
/// RECURRENCE_PROVEN is consistent when find_recurrence succeeds within the
/// bounds (and, for the char-poly basis, chi_A holds from a finite offset).
/// A theorem recurrence can start late or have order above max_order, so a
/// miss is re-examined by checking the attached recurrence exactly on windows
/// N, 2N and 4N before it counts as inconsistent.
/// NO_RECURRENCE_PROVEN needs no recurrence found and a cell trace that is
/// not stabilized; a stabilized trace is re-examined on 2N.
/// Errors propagate from the components (RankDeficient, WindowTooShort, ...).
ConsistencyReport cross_check(const IntMatrix& a, std::size_t window, std::size_t max_order,
                              std::optional<std::size_t> guard = std::nullopt,
                              unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace monodeg
