#include "monodeg/spectra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "monodeg/error.hpp"
#include "spectra/ball.hpp"
#include "spectra/isolate.hpp"

namespace monodeg {

using detail::Disk;
using detail::Isolator;

// ---------------------------------------------------------------------------
// Presentation

std::string RootBox::to_string(int digits) const {
  std::string s = detail::to_decimal(center.re, digits);
  if (!is_real) {
    s += center.im < 0 ? " - " : " + ";
    s += detail::to_decimal(abs(center.im), digits) + "i";
  }
  return s + " ± " + detail::scientific_upper(radius);
}

const char* to_string(UnitComparison c) noexcept {
  switch (c) {
    case UnitComparison::Greater:
      return "GT";
    case UnitComparison::Equal:
      return "EQ";
    case UnitComparison::Less:
      return "LT";
  }
  return "?";
}

std::string RatioFlag::to_string() const {
  switch (kind) {
    case RatioKind::RootOfUnity:
      return "ROOT_OF_UNITY(" + std::to_string(order) + ")";
    case RatioKind::NotRootOfUnity:
      return "NOT_ROOT_OF_UNITY";
    case RatioKind::Unresolved:
      return "UNRESOLVED";
  }
  return "?";
}

bool SpectralSummary::resolved() const {
  if (!classes_resolved) return false;
  return std::none_of(ratio_flags.begin(), ratio_flags.end(),
                      [](const RatioFlag& f) { return f.kind == RatioKind::Unresolved; });
}

std::optional<std::size_t> SpectralSummary::class_of(std::size_t root) const {
  for (std::size_t c = 0; c < modulus_classes.size(); ++c) {
    const auto& m = modulus_classes[c].members;
    if (std::find(m.begin(), m.end(), root) != m.end()) return c;
  }
  return std::nullopt;
}

int SpectralSummary::real_sign(std::size_t root) const {
  const RootBox& b = roots.at(root);
  if (!b.is_real) return 0;
  if (b.center.re - b.radius > 0) return 1;
  if (b.center.re + b.radius < 0) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Exact polynomial constructions

SquarefreeDecomposition squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "squarefree part of the zero polynomial");
  SquarefreeDecomposition out;
  const IntPoly f = primitive_part(p);
  if (f.degree() < 1) {
    out.part = IntPoly{1};
    return out;
  }
  // Yun. Every division is exact in Z[t] by Gauss's lemma since the divisors
  // are primitive.
  const IntPoly df = derivative(f);
  const IntPoly a0 = poly_gcd(f, df);
  IntPoly b = exact_div(f, a0);
  IntPoly c = exact_div(df, a0);
  IntPoly d = c - derivative(b);
  out.part = primitive_part(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const IntPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.factors.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
  }
  return out;
}

namespace {

bool is_squarefree(const IntPoly& p) { return poly_gcd(p, derivative(p)).degree() == 0; }

void require_ratio_input(const IntPoly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "polynomial of degree >= 1 required");
  if (p.coeff(0) == 0) throw Error(ErrorCode::InvalidArgument, "p(0) = 0: zero root");
}

YPoly constant_in_x(const IntPoly& p) {
  YPoly out;
  for (const auto& c : p.coeffs()) out.push_back(IntPoly::constant(c));
  return out;
}

// Orders m >= 1 with phi(m) <= bound; phi(m) >= sqrt(m/2) limits the search
// to m <= 2 bound^2.
std::vector<unsigned long> orders_with_phi_at_most(unsigned long bound) {
  std::vector<unsigned long> out;
  for (unsigned long m = 1; m <= 2 * bound * bound; ++m)
    if (euler_phi(m) <= bound) out.push_back(m);
  return out;
}

// (m, gcd(p, Phi_m)) for every cyclotomic factor of p.
std::vector<std::pair<unsigned long, IntPoly>> cyclotomic_parts(const IntPoly& p, unsigned long phi_bound) {
  std::vector<std::pair<unsigned long, IntPoly>> out;
  if (p.degree() < 1) return out;
  for (unsigned long m : orders_with_phi_at_most(phi_bound)) {
    IntPoly g = poly_gcd(p, cyclotomic(m));
    if (g.degree() > 0) out.emplace_back(m, std::move(g));
  }
  return out;
}

}  // namespace

IntPoly product_polynomial(const IntPoly& p) {
  require_ratio_input(p);
  const std::size_t d = static_cast<std::size_t>(p.degree());
  YPoly g(d + 1);
  for (std::size_t i = 0; i <= d; ++i) g[d - i] = IntPoly::monomial(p.coeff(i), i);
  return resultant_in_y(constant_in_x(p), g);
}

RatioPolynomials ratio_polynomial(const IntPoly& p) {
  require_ratio_input(p);
  const std::size_t k = static_cast<std::size_t>(p.degree());
  YPoly g(k + 1);
  for (std::size_t i = 0; i <= k; ++i) g[i] = IntPoly::monomial(p.coeff(i), i);
  RatioPolynomials out;
  out.full = resultant_in_y(constant_in_x(p), g);
  out.reduced = exact_div(out.full, poly_pow(IntPoly{-1, 1}, static_cast<unsigned>(k)));
  return out;
}

std::vector<unsigned long> unity_ratio_orders(const IntPoly& p) {
  const RatioPolynomials r = ratio_polynomial(p);
  const unsigned long k = static_cast<unsigned long>(p.degree());
  std::vector<unsigned long> out;
  if (r.reduced.degree() < 1) return out;
  for (unsigned long m : orders_with_phi_at_most(k * k))
    if (poly_gcd(r.reduced, cyclotomic(m)).degree() > 0) out.push_back(m);
  return out;
}

std::vector<RootBox> isolate_roots(const IntPoly& p, const Rational& eps) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "isolate_roots needs degree >= 1");
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  if (!is_squarefree(p)) throw Error(ErrorCode::InvalidArgument, "isolate_roots needs a squarefree polynomial");
  // smallest b with 2^-b <= eps
  unsigned bits = 0;
  while (detail::ldexp(Rational(1), -static_cast<long>(bits)) > eps) ++bits;
  Isolator iso(p);
  return iso.boxes(bits);
}

// ---------------------------------------------------------------------------
// Modulus classes and ratio flags

namespace {

// Targets tried in order: cap/8, cap/4, cap/2, cap.
std::vector<unsigned> precision_ladder(unsigned cap) {
  cap = std::max(cap, 8u);
  return {cap / 8, cap / 4, cap / 2, cap};
}

// Index of the single box of `boxes` that meets each box of `inner`, or
// nullopt if any match is ambiguous.
std::optional<std::vector<std::size_t>> match_all(const std::vector<RootBox>& inner,
                                                  const std::vector<Disk>& outer) {
  std::vector<std::size_t> out;
  for (const auto& b : inner) {
    auto hit = detail::unique_meeting(detail::disk_of(b), outer);
    if (!hit) return std::nullopt;
    out.push_back(*hit);
  }
  return out;
}

// All exact data and lazily refined isolations used for one squarefree p.
struct Analysis {
  IntPoly p;
  Isolator roots;
  std::vector<std::pair<unsigned long, Isolator>> cyclo;
  IntPoly q;
  Isolator q_roots;
  bool q_vanishes_at_one;

  explicit Analysis(const IntPoly& sq)
      : p(sq),
        roots(sq),
        q(squarefree_part(product_polynomial(sq)).part),
        q_roots(q),
        q_vanishes_at_one(q.eval(Integer(1)) == 0) {
    for (auto& [m, g] : cyclotomic_parts(sq, static_cast<unsigned long>(sq.degree())))
      cyclo.emplace_back(m, Isolator(g));
  }

  // Classes at one precision level; nullopt when this level cannot decide.
  std::optional<std::vector<ModulusClass>> classify(unsigned bits) {
    const auto& boxes = roots.boxes(bits);
    const auto disks = detail::disks_of(boxes);
    std::vector<bool> on_circle(boxes.size(), false);
    for (auto& [m, iso] : cyclo) {
      auto hits = match_all(iso.boxes(bits), disks);
      if (!hits) return std::nullopt;
      for (std::size_t h : *hits) on_circle[h] = true;
    }
    const auto& qboxes = q_roots.boxes(bits);
    const auto qdisks = detail::disks_of(qboxes);

    // |lambda_i|^2 is a real root of Q; find which Q box holds it.
    std::vector<std::size_t> qidx(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      auto [lo, hi] = on_circle[i] ? std::pair<Rational, Rational>{1, 1}
                                   : detail::modulus_squared_bounds(disks[i]);
      auto hit = detail::unique_meeting_segment(lo, hi, qdisks);
      if (!hit) return std::nullopt;
      qidx[i] = *hit;
    }

    std::optional<std::size_t> unit_box;
    if (q_vanishes_at_one) {
      const ComplexRational one{Rational(1), Rational(0)};
      for (std::size_t j = 0; j < qdisks.size(); ++j)
        if (detail::contains(qdisks[j], one)) unit_box = j;
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < boxes.size(); ++i) groups[qidx[i]].push_back(i);
    std::vector<ModulusClass> classes;
    for (auto& [j, members] : groups) {
      const Disk& d = qdisks[j];
      ModulusClass c;
      c.members = members;
      c.cyclotomic = std::any_of(members.begin(), members.end(), [&](std::size_t i) { return on_circle[i]; });
      if (unit_box && *unit_box == j) {
        c.vs_one = UnitComparison::Equal;
        c.modulus_sq_lo = c.modulus_sq_hi = 1;
      } else {
        const ComplexRational one{Rational(1), Rational(0)};
        if (detail::contains(d, one)) return std::nullopt;
        c.vs_one = d.center.re > 1 ? UnitComparison::Greater : UnitComparison::Less;
        c.modulus_sq_lo = std::max(Rational(0), Rational(d.center.re - d.radius));
        c.modulus_sq_hi = d.center.re + d.radius;
      }
      if (c.cyclotomic && c.vs_one != UnitComparison::Equal) {
        throw std::logic_error("cyclotomic root not on the unit circle for " + p.to_string());
      }
      classes.push_back(std::move(c));
    }
    // Disjoint Q boxes meet the real axis in disjoint segments centred at
    // center.re, so centres order the moduli.
    std::sort(classes.begin(), classes.end(), [&](const ModulusClass& a, const ModulusClass& b) {
      return qdisks[qidx[a.members.front()]].center.re > qdisks[qidx[b.members.front()]].center.re;
    });
    return classes;
  }
};

// Decides whether conj(lambda)/lambda is a root of unity for each root.
struct RatioAnalysis {
  std::vector<unsigned long> orders;  // unity orders of the squarefree part
  std::optional<Isolator> reduced;
  std::vector<std::pair<unsigned long, Isolator>> unity_parts;

  explicit RatioAnalysis(const IntPoly& sq) : orders(unity_ratio_orders(sq)) {
    if (orders.empty()) return;
    const IntPoly red = squarefree_part(ratio_polynomial(sq).reduced).part;
    reduced.emplace(red);
    for (unsigned long m : orders) unity_parts.emplace_back(m, Isolator(poly_gcd(red, cyclotomic(m))));
  }

  std::vector<RatioFlag> flags(const std::vector<RootBox>& boxes, unsigned bits) {
    std::vector<RatioFlag> out(boxes.size());
    std::vector<Disk> rdisks;
    // order of the unity root held by each reduced box (0 = not a root of unity)
    std::vector<unsigned long> box_order;
    bool unity_known = true;
    if (reduced) {
      rdisks = detail::disks_of(reduced->boxes(bits));
      box_order.assign(rdisks.size(), 0);
      for (auto& [m, iso] : unity_parts) {
        auto hits = match_all(iso.boxes(bits), rdisks);
        if (!hits) {
          unity_known = false;
          break;
        }
        for (std::size_t h : *hits) box_order[h] = m;
      }
    }
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const RootBox& b = boxes[i];
      if (b.is_real) {
        out[i] = {RatioKind::RootOfUnity, 1};
        continue;
      }
      if (!reduced) {
        out[i] = {RatioKind::NotRootOfUnity, 0};
        continue;
      }
      if (!unity_known) continue;
      // conj(l)/l lies within 2r / (|c| - r) of conj(c)/c
      const Rational abs_lo = detail::sqrt_lower(detail::norm2(b.center), 32);
      if (abs_lo <= b.radius) continue;
      const Disk ratio{detail::divide(detail::conj(b.center), b.center),
                       2 * b.radius / (abs_lo - b.radius)};
      auto hit = detail::unique_meeting(ratio, rdisks);
      if (!hit) continue;
      out[i] = box_order[*hit] ? RatioFlag{RatioKind::RootOfUnity, box_order[*hit]}
                               : RatioFlag{RatioKind::NotRootOfUnity, 0};
    }
    return out;
  }
};

// Multiplicity of each root of the squarefree part; nullopt if ambiguous.
std::optional<std::vector<unsigned>> multiplicities(const SquarefreeDecomposition& sq,
                                                    std::vector<Isolator>& factor_isos,
                                                    const std::vector<RootBox>& boxes, unsigned bits) {
  std::vector<unsigned> out(boxes.size(), 0);
  if (sq.factors.size() == 1) {
    std::fill(out.begin(), out.end(), sq.factors.front().second);
    return out;
  }
  const auto disks = detail::disks_of(boxes);
  for (std::size_t f = 0; f < sq.factors.size(); ++f) {
    auto hits = match_all(factor_isos[f].boxes(bits), disks);
    if (!hits) return std::nullopt;
    for (std::size_t h : *hits) {
      if (out[h] != 0) return std::nullopt;
      out[h] = sq.factors[f].second;
    }
  }
  if (std::find(out.begin(), out.end(), 0u) != out.end()) return std::nullopt;
  return out;
}

// Display order: by class (decreasing modulus), real roots before complex,
// larger real part first, positive imaginary part before its conjugate.
std::vector<std::size_t> display_order(const std::vector<RootBox>& boxes, const std::vector<ModulusClass>& classes) {
  std::vector<std::size_t> rank(boxes.size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t i : classes[c].members) rank[i] = c;
  std::vector<std::size_t> perm(boxes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const RootBox& x = boxes[a];
    const RootBox& y = boxes[b];
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    if (x.is_real != y.is_real) return x.is_real;
    // a pair sorts by its upper member's real part
    const std::size_t ua = x.center.im >= 0 || !x.conjugate_partner ? a : *x.conjugate_partner;
    const std::size_t ub = y.center.im >= 0 || !y.conjugate_partner ? b : *y.conjugate_partner;
    if (ua != ub) {
      if (boxes[ua].center.re != boxes[ub].center.re) return boxes[ua].center.re > boxes[ub].center.re;
      return ua < ub;
    }
    return x.center.im > y.center.im;
  });
  return perm;
}

}  // namespace

ModulusPartition modulus_classes(const IntPoly& p, unsigned precision_bits) {
  require_ratio_input(p);
  if (!is_squarefree(p)) throw Error(ErrorCode::InvalidArgument, "modulus_classes needs a squarefree polynomial");
  Analysis an(p);
  for (unsigned bits : precision_ladder(precision_bits)) {
    if (auto classes = an.classify(bits)) return {an.roots.boxes(bits), std::move(*classes)};
  }
  throw Error(ErrorCode::UnresolvedClass,
              "modulus classes of " + p.to_string() + " unresolved at 2^-" + std::to_string(precision_bits));
}

SpectralSummary spectral_summary(const IntMatrix& a, unsigned precision_bits) {
  const Integer d = det(a);
  if (d == 0) throw Error(ErrorCode::RankDeficient, "matrix " + a.to_string() + " is singular");
  SpectralSummary s;
  s.precision_bits = precision_bits;
  s.char_poly = char_poly(a);
  // product of the roots is (-1)^k chi(0) = det A
  const Integer expected = (a.dim() % 2 ? Integer(-s.char_poly.coeff(0)) : s.char_poly.coeff(0));
  if (expected != d) throw std::logic_error("characteristic polynomial disagrees with det");

  const SquarefreeDecomposition sq = squarefree_part(s.char_poly);
  s.squarefree = sq.part;
  s.unity_orders = unity_ratio_orders(s.char_poly);

  Analysis an(sq.part);
  RatioAnalysis ratios(sq.part);
  std::vector<Isolator> factor_isos;
  for (const auto& [f, e] : sq.factors) factor_isos.emplace_back(f);

  const auto ladder = precision_ladder(precision_bits);
  for (std::size_t level = 0; level < ladder.size(); ++level) {
    const unsigned bits = ladder[level];
    const bool last = level + 1 == ladder.size();
    std::vector<RootBox> boxes = an.roots.boxes(bits);
    auto mult = multiplicities(sq, factor_isos, boxes, bits);
    if (!mult) {
      if (last) throw std::logic_error("multiplicities unresolved for " + s.char_poly.to_string());
      continue;
    }
    for (std::size_t i = 0; i < boxes.size(); ++i) boxes[i].multiplicity = (*mult)[i];
    auto classes = an.classify(bits);
    auto flags = ratios.flags(boxes, bits);
    const bool flags_done = std::none_of(flags.begin(), flags.end(),
                                         [](const RatioFlag& f) { return f.kind == RatioKind::Unresolved; });
    if (!(classes && flags_done) && !last) continue;

    const std::vector<ModulusClass> no_classes;
    const auto perm = display_order(boxes, classes ? *classes : no_classes);
    std::vector<std::size_t> where(perm.size());
    for (std::size_t n = 0; n < perm.size(); ++n) where[perm[n]] = n;
    for (std::size_t n = 0; n < perm.size(); ++n) {
      RootBox b = boxes[perm[n]];
      if (b.conjugate_partner) b.conjugate_partner = where[*b.conjugate_partner];
      s.roots.push_back(std::move(b));
      s.ratio_flags.push_back(flags[perm[n]]);
    }
    if (classes) {
      s.classes_resolved = true;
      for (auto& c : *classes) {
        for (auto& m : c.members) m = where[m];
        std::sort(c.members.begin(), c.members.end());
      }
      s.modulus_classes = std::move(*classes);
      const auto& top = s.modulus_classes.front().members;
      if (top.size() == 2 && !s.roots[top[0]].is_real && s.roots[top[0]].conjugate_partner == top[1]) {
        s.dominant_pair = std::pair{top[0], top[1]};
      }
    }
    break;
  }
  return s;
}

}  // namespace monodeg
