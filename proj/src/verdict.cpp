#include "monodeg/verdict.hpp"

#include <numeric>
#include <sstream>

#include "monodeg/error.hpp"

namespace monodeg {

const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::RecurrenceProven:
      return "RECURRENCE_PROVEN";
    case Classification::NoRecurrenceProven:
      return "NO_RECURRENCE_PROVEN";
    case Classification::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Basis b) noexcept {
  switch (b) {
    case Basis::Thm11Part1:
      return "THM_1_1_PART1";
    case Basis::Thm27CharPoly:
      return "THM_2_7_CHARPOLY";
    case Basis::Prop31:
      return "PROP_3_1";
    case Basis::DualityThm12:
      return "DUALITY_THM_1_2";
    case Basis::DualityThm13:
      return "DUALITY_THM_1_3";
    case Basis::Duality:
      return "DUALITY";
  }
  return "?";
}

const char* to_string(Consistency c) noexcept {
  return c == Consistency::Consistent ? "CONSISTENT" : "INCONSISTENT";
}

namespace {

std::string describe(const SpectralSummary& s, std::size_t i) {
  std::ostringstream os;
  os << "l" << i << " = " << s.roots[i].to_string(6);
  if (auto c = s.class_of(i)) os << " (" << to_string(s.modulus_classes[*c].vs_one) << " 1";
  else os << " (unclassified";
  if (!s.roots[i].is_real) os << ", " << s.ratio_flags[i].to_string();
  os << ")";
  return os.str();
}

Verdict unknown(Verdict v, std::string reason) {
  v.classification = Classification::Unknown;
  v.basis.reset();
  v.reason = std::move(reason);
  return v;
}

}  // namespace

Verdict classify_d1(const IntMatrix& a, unsigned precision_bits) {
  return classify_d1(a, spectral_summary(a, precision_bits));
}

Verdict classify_d1(const IntMatrix& a, SpectralSummary spectrum) {
  Verdict v;
  v.spectrum = std::move(spectrum);
  const SpectralSummary& s = v.spectrum;
  if (!s.classes_resolved) return unknown(std::move(v), "modulus classes unresolved at the precision cap");
  for (const auto& c : s.modulus_classes) v.unit_modulus |= c.vs_one == UnitComparison::Equal;

  // H2 first: when the top class is one simple pair with a non-unity ratio,
  // H1 fails on that pair anyway (the top modulus is >= 1 because |det| >= 1).
  if (s.dominant_pair) {
    const auto [i, j] = *s.dominant_pair;
    v.eigenvalues = {i, j};
    const bool simple = s.roots[i].multiplicity == 1 && s.roots[j].multiplicity == 1;
    const bool non_unity = s.ratio_flags[i].kind == RatioKind::NotRootOfUnity;
    if (simple && non_unity) {
      v.classification = Classification::NoRecurrenceProven;
      v.basis = Basis::Prop31;
      v.reason = "dominant eigenvalues are one simple conjugate pair " + describe(s, i) + ", " +
                 describe(s, j) + "; conj(l)/l is not a root of unity";
      return v;
    }
    if (!simple && non_unity) {
      return unknown(std::move(v), "dominant conjugate pair is not simple and its ratio is not a root of unity");
    }
  }

  // H1
  v.eigenvalues.clear();
  bool all_positive_real = true;
  unsigned long tau = 1;
  for (std::size_t c = 0; c < s.modulus_classes.size(); ++c) {
    const ModulusClass& cls = s.modulus_classes[c];
    if (cls.vs_one == UnitComparison::Less) continue;
    for (std::size_t i : cls.members) {
      v.eigenvalues.push_back(i);
      if (s.roots[i].is_real) {
        const int sign = s.real_sign(i);
        if (sign != 1) all_positive_real = false;
        // l^2 > 0 also covers an undecided sign
        if (sign != 1) tau = std::lcm(tau, 2ul);
        continue;
      }
      all_positive_real = false;
      const RatioFlag& f = s.ratio_flags[i];
      if (f.kind == RatioKind::NotRootOfUnity) {
        return unknown(std::move(v), describe(s, i) + " has |l| >= 1 but conj(l)/l is not a root of unity, and the "
                                                      "maximum modulus is not carried by one simple pair");
      }
      if (f.kind == RatioKind::Unresolved) {
        return unknown(std::move(v), describe(s, i) + ": ratio certification unresolved at the precision cap");
      }
      // conj(l)/l of order m makes l^(2m) real and positive
      tau = std::lcm(tau, 2 * f.order);
    }
  }

  v.classification = Classification::RecurrenceProven;
  std::string facts;
  for (std::size_t i : v.eigenvalues) facts += (facts.empty() ? "" : ", ") + describe(s, i);
  if (all_positive_real) {
    v.basis = Basis::Thm27CharPoly;
    v.recurrence = s.char_poly;
    v.tau = 1;
    v.reason = "every eigenvalue with |l| >= 1 is real and positive: " + facts;
  } else {
    v.basis = Basis::Thm11Part1;
    v.tau = tau;
    // chi_{A^tau}(t^tau): each residue class mod tau follows chi_{A^tau}
    const IntPoly chi = char_poly(mat_pow(a, tau));
    std::vector<Integer> spread(chi.coeffs().size() * tau - tau + 1);
    for (std::size_t i = 0; i < chi.coeffs().size(); ++i) spread[i * tau] = chi.coeffs()[i];
    v.recurrence = IntPoly(std::move(spread));
    v.reason = "conj(l)/l is a root of unity for every eigenvalue with |l| >= 1: " + facts;
  }
  return v;
}

Verdict classify_dual(const IntMatrix& a, unsigned precision_bits) {
  const IntMatrix inv = inverse_unimodular(a);
  Verdict v = classify_d1(inv, precision_bits);
  v.dual = true;
  if (v.basis) {
    v.underlying = v.basis;
    v.basis = a.dim() == 3 ? Basis::DualityThm12 : a.dim() == 4 ? Basis::DualityThm13 : Basis::Duality;
  }
  return v;
}

namespace {

bool stabilized(const CellTrace& t) { return t.verdict.status == TraceStatus::Stabilized; }

}  // namespace

ConsistencyReport cross_check(const IntMatrix& a, std::size_t window, std::size_t max_order,
                              std::optional<std::size_t> guard, unsigned precision_bits) {
  ConsistencyReport r;
  r.verdict = classify_d1(a, precision_bits);
  r.sequence = degree_sequence(a, window).terms;
  r.max_order = max_order;
  if (!guard && window < 2 * max_order) {
    throw Error(ErrorCode::WindowTooShort, "window " + std::to_string(window) + " is shorter than 2 * max_order");
  }
  r.guard = guard.value_or(window - 2 * max_order);
  r.found = find_recurrence(r.sequence, max_order, r.guard);
  r.trace = cell_trace(a, window);

  auto fail = [&r](std::string why) {
    r.status = Consistency::Inconsistent;
    r.evidence.push_back(std::move(why));
  };

  if (r.found) {
    r.evidence.push_back("found recurrence " + r.found->to_string() + " valid from n = " +
                         std::to_string(r.found->valid_from));
  } else {
    r.evidence.push_back("no recurrence of order <= " + std::to_string(max_order) + " within " +
                         std::to_string(window) + " terms");
  }
  r.evidence.push_back(std::string("cell trace ") + to_string(r.trace.verdict.status) + " with " +
                       std::to_string(r.trace.switch_indices.size()) + " switches");

  switch (r.verdict.classification) {
    case Classification::RecurrenceProven: {
      const bool charpoly = r.verdict.basis == Basis::Thm27CharPoly;
      if (r.found && !charpoly) break;
      const IntPoly& p = *r.verdict.recurrence;
      for (std::size_t w = window; w <= 4 * window && !r.attached_offset; w *= 2) {
        const auto terms = w == window ? r.sequence : degree_sequence(a, w).terms;
        if (terms.size() < static_cast<std::size_t>(p.degree()) + 2) continue;
        r.attached_offset = check_candidate(terms, p);
        r.attached_window = w;
      }
      if (!r.attached_offset) {
        if (!r.found) fail("RECURRENCE_PROVEN but find_recurrence returned NONE");
        fail("attached recurrence " + p.to_string() + " does not hold on " + std::to_string(4 * window) + " terms");
        break;
      }
      r.evidence.push_back("attached recurrence " + p.to_string() + " holds from n = " +
                           std::to_string(*r.attached_offset) + " on " + std::to_string(r.attached_window) +
                           " terms");
      // a miss is a window artifact once the theorem's recurrence is verified
      if (!r.found) r.evidence.push_back("recurrence lies outside the search bounds (late start or order > max_order)");
      break;
    }
    case Classification::NoRecurrenceProven:
      if (r.found) fail("NO_RECURRENCE_PROVEN but found " + r.found->to_string());
      if (stabilized(r.trace)) {
        const CellTrace longer = cell_trace(a, 2 * window);
        r.evidence.push_back(std::string("re-examined cell trace on ") + std::to_string(2 * window) +
                             " terms: " + to_string(longer.verdict.status));
        if (stabilized(longer)) fail("NO_RECURRENCE_PROVEN but the cell trace stabilized");
      }
      break;
    case Classification::Unknown:
      break;
  }
  return r;
}

}  // namespace monodeg
