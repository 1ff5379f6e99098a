#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "monodeg/error.hpp"
#include "monodeg/spectra.hpp"
#include "oracles.hpp"

using namespace monodeg;

namespace {

using C = std::complex<long double>;

const IntMatrix kHP{{-1, 1, 0}, {-1, 0, 1}, {1, 0, 0}};
const IntPoly kHPChar{-1, 1, 1, 1};     // t^3 + t^2 + t - 1
const IntPoly kTribChar{-1, -1, -1, 1};  // t^3 - t^2 - t - 1

// Index of the box whose centre is within tol of z.
std::optional<std::size_t> box_near(const std::vector<RootBox>& boxes, C z, long double tol = 1e-9L) {
  for (std::size_t i = 0; i < boxes.size(); ++i)
    if (std::abs(oracle::to_complex(boxes[i].center) - z) < tol) return i;
  return std::nullopt;
}

// Every numerically found root sits in exactly one box, and vice versa.
void check_boxes_match_numeric_roots(const IntPoly& p, const std::vector<RootBox>& boxes) {
  auto roots = oracle::numeric_roots(p);
  REQUIRE(roots.size() == boxes.size());
  std::set<std::size_t> used;
  for (const auto& z : roots) {
    auto i = box_near(boxes, z, 1e-7L);
    REQUIRE(i);
    used.insert(*i);
    CHECK(boxes[*i].is_real == (std::abs(z.imag()) < 1e-9L));
  }
  CHECK(used.size() == boxes.size());
}

// Exact sign change across a real box: the intermediate value theorem puts a
// root inside without trusting the isolation code.
bool sign_change(const IntPoly& p, const RootBox& b) {
  const Rational lo = b.center.re - b.radius;
  const Rational hi = b.center.re + b.radius;
  return sgn(p.eval(lo)) * sgn(p.eval(hi)) < 0;
}

// Smallest m <= limit with z^m within tol of 1, or 0.
unsigned long numeric_order(C z, unsigned long limit) {
  C w = 1;
  for (unsigned long m = 1; m <= limit; ++m) {
    w *= z;
    if (std::abs(w - C(1)) < 1e-8L) return m;
  }
  return 0;
}

IntPoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<long> coef(-4, 4);
  std::vector<Integer> c;
  for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
  if (c[0] == 0) c[0] = 1;
  long lead = coef(rng);
  c.emplace_back(lead == 0 ? 1 : lead);
  return IntPoly(c);
}

bool squarefree(const IntPoly& p) { return poly_gcd(p, derivative(p)).degree() == 0; }

}  // namespace

TEST_CASE("squarefree_part") {
  auto sq = squarefree_part(poly_pow(IntPoly{-1, 1}, 2));
  CHECK(sq.part == IntPoly{-1, 1});
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0] == std::pair{IntPoly{-1, 1}, 2u});

  auto hp = squarefree_part(kHPChar);
  CHECK(hp.part == kHPChar);
  REQUIRE(hp.factors.size() == 1);
  CHECK(hp.factors[0].second == 1);

  // t^2 (t - 1): the root 0 has multiplicity 2, the root 1 multiplicity 1
  auto mixed = squarefree_part(IntPoly{0, 0, -1, 1});
  CHECK(mixed.part == IntPoly{0, -1, 1});
  REQUIRE(mixed.factors.size() == 2);
  CHECK(mixed.factors[0] == std::pair{IntPoly{-1, 1}, 1u});
  CHECK(mixed.factors[1] == std::pair{IntPoly{0, 1}, 2u});

  CHECK(squarefree_part(IntPoly{6}).part == IntPoly{1});
  CHECK_THROWS_AS(squarefree_part(IntPoly{}), Error);

  SUBCASE("reassembles the input") {
    std::mt19937 rng(61);
    for (int t = 0; t < 40; ++t) {
      IntPoly a = random_poly(rng, 1 + t % 2), b = random_poly(rng, 1 + t % 3);
      IntPoly p = poly_pow(a, 1 + t % 3) * b;
      auto d = squarefree_part(p);
      IntPoly prod = IntPoly{1};
      for (const auto& [f, e] : d.factors) prod = prod * poly_pow(f, e);
      CHECK(primitive_part(prod) == primitive_part(p));
      CHECK(squarefree(d.part));
      CHECK(divides(d.part, p));
    }
  }
}

TEST_CASE("isolate_roots") {
  const Rational eps = make_rational(1, Integer(1) << 40);

  SUBCASE("t^2 + 1") {
    auto boxes = isolate_roots(IntPoly{1, 0, 1}, eps);
    REQUIRE(boxes.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK_FALSE(boxes[i].is_real);
      REQUIRE(boxes[i].conjugate_partner);
      CHECK(*boxes[i].conjugate_partner == 1 - i);
      CHECK(boxes[i].radius <= eps);
    }
    CHECK(box_near(boxes, C(0, 1)));
    CHECK(box_near(boxes, C(0, -1)));
  }

  SUBCASE("HP characteristic polynomial") {
    auto boxes = isolate_roots(kHPChar, eps);
    REQUIRE(boxes.size() == 3);
    check_boxes_match_numeric_roots(kHPChar, boxes);
    auto real = box_near(boxes, C(0.5436890127L, 0), 1e-9L);
    REQUIRE(real);
    CHECK(boxes[*real].is_real);
    CHECK(sign_change(kHPChar, boxes[*real]));
    auto upper = box_near(boxes, C(-0.7718445063L, 1.1151425080L), 1e-9L);
    auto lower = box_near(boxes, C(-0.7718445063L, -1.1151425080L), 1e-9L);
    REQUIRE(upper);
    REQUIRE(lower);
    CHECK(boxes[*upper].conjugate_partner == *lower);
  }

  SUBCASE("(t - 2)(t - 3)") {
    auto boxes = isolate_roots(IntPoly{6, -5, 1}, eps);
    REQUIRE(boxes.size() == 2);
    for (const auto& b : boxes) {
      CHECK(b.is_real);
      CHECK(b.center.im == 0);
      CHECK(sign_change(IntPoly{6, -5, 1}, b));
    }
    CHECK(box_near(boxes, C(2, 0)));
    CHECK(box_near(boxes, C(3, 0)));
  }

  SUBCASE("malformed input") {
    CHECK_THROWS_AS(isolate_roots(IntPoly{3}, eps), Error);
    CHECK_THROWS_AS(isolate_roots(poly_pow(IntPoly{-1, 1}, 2), eps), Error);
    CHECK_THROWS_AS(isolate_roots(IntPoly{1, 1}, Rational(0)), Error);
  }

  SUBCASE("random squarefree polynomials") {
    std::mt19937 rng(67);
    for (int t = 0; t < 60; ++t) {
      IntPoly p = random_poly(rng, 1 + t % 8);
      if (!squarefree(p)) continue;
      auto coarse = isolate_roots(p, make_rational(1, Integer(1) << 24));
      auto fine = isolate_roots(p, make_rational(1, Integer(1) << 48));
      REQUIRE(coarse.size() == static_cast<std::size_t>(p.degree()));
      check_boxes_match_numeric_roots(p, fine);
      // The separation bound is a true lower bound, and boxes below half of it
      // cannot hold two roots.
      const Rational sep2 = separation_bound_squared(p);
      auto numeric = oracle::numeric_roots(p);
      for (std::size_t i = 0; i < numeric.size(); ++i)
        for (std::size_t j = i + 1; j < numeric.size(); ++j)
          CHECK(std::norm(numeric[i] - numeric[j]) > sep2.get_d() * 0.999);
      for (std::size_t i = 0; i < fine.size(); ++i) {
        // Exact residual check: |p(c)| = |lc| prod |c - lambda_j| with
        // |c - lambda_i| <= r_i and |c - lambda_j| <= |c - c_j| + r_j, and
        // (u + v)^2 <= 2u^2 + 2v^2 keeps everything rational.
        const ComplexRational& c = fine[i].center;
        Rational bound = p.leading() * p.leading() * fine[i].radius * fine[i].radius;
        for (std::size_t j = 0; j < fine.size(); ++j) {
          if (j == i) continue;
          const Rational dr = c.re - fine[j].center.re, di = c.im - fine[j].center.im;
          bound *= 2 * (dr * dr + di * di) + 2 * fine[j].radius * fine[j].radius;
        }
        Rational re = 0, im = 0;
        for (std::size_t k = p.coeffs().size(); k-- > 0;) {
          Rational nr = re * c.re - im * c.im + p.coeffs()[k];
          im = re * c.im + im * c.re;
          re = nr;
        }
        CHECK(re * re + im * im <= bound);
        // refining keeps each root in a smaller box inside the coarse one's reach
        auto k = box_near(coarse, oracle::to_complex(c), 1e-6L);
        REQUIRE(k);
        CHECK(fine[i].radius <= coarse[*k].radius);
        CHECK(fine[i].is_real == coarse[*k].is_real);
        if (fine[i].is_real) CHECK(sign_change(p, fine[i]));
      }
    }
  }
}

TEST_CASE("modulus_classes") {
  SUBCASE("t^2 + 1") {
    auto part = modulus_classes(IntPoly{1, 0, 1});
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].members.size() == 2);
    CHECK(part.classes[0].vs_one == UnitComparison::Equal);
    CHECK(part.classes[0].cyclotomic);
  }

  SUBCASE("HP characteristic polynomial") {
    auto part = modulus_classes(kHPChar);
    REQUIRE(part.classes.size() == 2);
    const auto& top = part.classes[0];
    REQUIRE(top.members.size() == 2);
    CHECK(top.vs_one == UnitComparison::Greater);
    for (std::size_t i : top.members) CHECK_FALSE(part.roots[i].is_real);
    // |lambda|^2 of the pair is 1/lambda_real
    CHECK(top.modulus_sq_lo.get_d() == doctest::Approx(1 / 0.5436890127).epsilon(1e-9));
    CHECK(std::sqrt(top.modulus_sq_hi.get_d()) == doctest::Approx(1.3562030656).epsilon(1e-9));
    REQUIRE(part.classes[1].members.size() == 1);
    CHECK(part.roots[part.classes[1].members[0]].is_real);
    CHECK(part.classes[1].vs_one == UnitComparison::Less);
  }

  SUBCASE("tribonacci polynomial") {
    auto part = modulus_classes(kTribChar);
    REQUIRE(part.classes.size() == 2);
    REQUIRE(part.classes[0].members.size() == 1);
    const RootBox& dominant = part.roots[part.classes[0].members[0]];
    CHECK(dominant.is_real);
    CHECK(dominant.center.re.get_d() == doctest::Approx(1.8392867552).epsilon(1e-9));
    CHECK(part.classes[0].vs_one == UnitComparison::Greater);
    CHECK(part.classes[1].members.size() == 2);
    CHECK(std::sqrt(part.classes[1].modulus_sq_lo.get_d()) == doctest::Approx(0.7373527058).epsilon(1e-9));
    CHECK(part.classes[1].vs_one == UnitComparison::Less);
  }

  SUBCASE("cyclotomic polynomials form one class on the unit circle") {
    for (unsigned long m = 1; m <= 12; ++m) {
      auto part = modulus_classes(cyclotomic(m));
      REQUIRE(part.classes.size() == 1);
      CHECK(part.classes[0].members.size() == euler_phi(m));
      CHECK(part.classes[0].vs_one == UnitComparison::Equal);
    }
  }

  SUBCASE("unit modulus without a cyclotomic factor") {
    // Salem-type quartic t^4 - t^3 - t^2 - t + 1: two roots on the unit circle
    // that are not roots of unity, plus a real pair tau, 1/tau.
    auto part = modulus_classes(IntPoly{1, -1, -1, -1, 1});
    REQUIRE(part.classes.size() == 3);
    CHECK(part.classes[0].vs_one == UnitComparison::Greater);
    CHECK(part.classes[1].vs_one == UnitComparison::Equal);
    CHECK_FALSE(part.classes[1].cyclotomic);
    CHECK(part.classes[1].members.size() == 2);
    CHECK(part.classes[2].vs_one == UnitComparison::Less);
  }

  SUBCASE("equal moduli across unrelated roots") {
    // (t^2 + 4)(t - 2)(t + 2): four roots of modulus 2
    auto part = modulus_classes(IntPoly{4, 0, 1} * IntPoly{-4, 0, 1});
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].members.size() == 4);
    CHECK(part.classes[0].vs_one == UnitComparison::Greater);
  }

  SUBCASE("agrees with numeric moduli") {
    std::mt19937 rng(71);
    for (int t = 0; t < 40; ++t) {
      IntPoly p = random_poly(rng, 1 + t % 5);
      if (!squarefree(p)) continue;
      auto part = modulus_classes(p);
      std::vector<long double> mod(part.roots.size());
      for (std::size_t i = 0; i < mod.size(); ++i) mod[i] = std::abs(oracle::to_complex(part.roots[i].center));
      std::size_t total = 0;
      long double previous = 1e300L;
      for (const auto& c : part.classes) {
        total += c.members.size();
        const long double m0 = mod[c.members.front()];
        for (std::size_t i : c.members) CHECK(std::abs(mod[i] - m0) < 1e-9L);
        CHECK(m0 < previous);
        previous = m0;
        if (c.vs_one == UnitComparison::Greater) CHECK(m0 > 1);
        if (c.vs_one == UnitComparison::Less) CHECK(m0 < 1);
        if (c.vs_one == UnitComparison::Equal) CHECK(std::abs(m0 - 1) < 1e-9L);
      }
      CHECK(total == part.roots.size());
    }
  }

  CHECK_THROWS_AS(modulus_classes(IntPoly{0, 1, 1}), Error);
  CHECK_THROWS_AS(modulus_classes(poly_pow(IntPoly{1, 1}, 2)), Error);
}

TEST_CASE("ratio_polynomial") {
  auto i_pair = ratio_polynomial(IntPoly{1, 0, 1});
  CHECK(primitive_part(i_pair.full) == poly_pow(IntPoly{-1, 1}, 2) * poly_pow(IntPoly{1, 1}, 2));
  CHECK(primitive_part(i_pair.reduced) == poly_pow(IntPoly{1, 1}, 2));

  auto no_unity = ratio_polynomial(IntPoly{3, -2, 1});
  CHECK(primitive_part(no_unity.reduced) == IntPoly{3, 2, 3});
  CHECK(no_unity.reduced == IntPoly{9, 6, 9});

  auto reals = ratio_polynomial(IntPoly{6, -5, 1});
  CHECK(primitive_part(reals.reduced) == IntPoly{6, -13, 6});

  CHECK_THROWS_AS(ratio_polynomial(IntPoly{0, 1}), Error);
  CHECK_THROWS_AS(ratio_polynomial(IntPoly{5}), Error);

  SUBCASE("structure on random characteristic polynomials") {
    std::mt19937 rng(73);
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = 1 + t % 4;
      IntMatrix a = oracle::random_full_rank(rng, k, -3, 3);
      IntPoly chi = char_poly(a);
      auto r = ratio_polynomial(chi);
      CHECK(r.full.degree() == static_cast<int>(k * k));
      CHECK(poly_pow(IntPoly{-1, 1}, static_cast<unsigned>(k)) * r.reduced == r.full);
      const IntPoly rev = reversal(r.reduced);
      CHECK((rev == r.reduced || rev == -r.reduced));
      // independent resultant route at a few integer points
      for (long x0 : {-2L, 2L, 3L}) {
        oracle::RatPoly f = oracle::to_rat(chi), g;
        Integer power = 1;
        for (const auto& c : chi.coeffs()) {
          g.emplace_back(c * power);
          power *= x0;
        }
        CHECK(Rational(r.full.eval(Integer(x0))) == oracle::euclid_resultant(f, g));
      }
    }
  }
}

TEST_CASE("unity_ratio_orders") {
  CHECK(unity_ratio_orders(IntPoly{1, 0, 1}) == std::vector<unsigned long>{2});
  CHECK(unity_ratio_orders(IntPoly{3, -2, 1}).empty());
  CHECK(unity_ratio_orders(kHPChar).empty());
  CHECK(unity_ratio_orders(IntPoly{-1, 0, 0, 0, 1}) == std::vector<unsigned long>{2, 4});
  CHECK(unity_ratio_orders(IntPoly{-2, 1}).empty());

  SUBCASE("matches numeric ratios and is invariant under reversal") {
    std::mt19937 rng(79);
    for (int t = 0; t < 60; ++t) {
      IntPoly p = random_poly(rng, 1 + t % 4);
      auto orders = unity_ratio_orders(p);
      CHECK(unity_ratio_orders(reversal(p)) == orders);
      if (!squarefree(p)) continue;
      const unsigned long k = static_cast<unsigned long>(p.degree());
      auto roots = oracle::numeric_roots(p);
      std::set<unsigned long> numeric;
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j)
          if (i != j)
            if (auto m = numeric_order(roots[i] / roots[j], 2 * k * k * k * k)) numeric.insert(m);
      CHECK(std::vector<unsigned long>(numeric.begin(), numeric.end()) == orders);
    }
  }
}

TEST_CASE("spectral_summary") {
  SUBCASE("quarter turn") {
    auto s = spectral_summary(IntMatrix{{0, -1}, {1, 0}});
    REQUIRE(s.roots.size() == 2);
    REQUIRE(s.resolved());
    REQUIRE(s.modulus_classes.size() == 1);
    CHECK(s.modulus_classes[0].vs_one == UnitComparison::Equal);
    REQUIRE(s.dominant_pair);
    for (const auto& f : s.ratio_flags) CHECK(f == RatioFlag{RatioKind::RootOfUnity, 2});
    CHECK(s.unity_orders == std::vector<unsigned long>{2});
  }

  SUBCASE("HP matrix") {
    auto s = spectral_summary(kHP);
    REQUIRE(s.resolved());
    REQUIRE(s.dominant_pair);
    CHECK(s.modulus_classes[0].vs_one == UnitComparison::Greater);
    const auto [i, j] = *s.dominant_pair;
    CHECK(s.ratio_flags[i] == RatioFlag{RatioKind::NotRootOfUnity, 0});
    CHECK(s.ratio_flags[j] == RatioFlag{RatioKind::NotRootOfUnity, 0});
    REQUIRE(s.modulus_classes.size() == 2);
    const std::size_t real = s.modulus_classes[1].members.at(0);
    CHECK(s.roots[real].is_real);
    CHECK(s.modulus_classes[1].vs_one == UnitComparison::Less);
    CHECK(s.real_sign(real) == 1);
    // display order: dominant pair first, upper half-plane member leading
    CHECK(s.roots[0].center.im > 0);
  }

  SUBCASE("identity") {
    auto s = spectral_summary(IntMatrix::identity(3));
    REQUIRE(s.roots.size() == 1);
    CHECK(s.roots[0].multiplicity == 3);
    CHECK(s.roots[0].is_real);
    REQUIRE(s.modulus_classes.size() == 1);
    CHECK(s.modulus_classes[0].vs_one == UnitComparison::Equal);
    CHECK(s.ratio_flags[0] == RatioFlag{RatioKind::RootOfUnity, 1});
    CHECK_FALSE(s.dominant_pair);
  }

  SUBCASE("duplicated pair is not simple") {
    IntMatrix a(4);
    const long b[2][2] = {{1, -2}, {1, 1}};
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) a(r, c) = a(r + 2, c + 2) = b[r][c];
    auto s = spectral_summary(a);
    REQUIRE(s.roots.size() == 2);
    CHECK(s.roots[0].multiplicity == 2);
    CHECK(s.roots[1].multiplicity == 2);
    REQUIRE(s.dominant_pair);
  }

  SUBCASE("singular matrix") {
    try {
      spectral_summary(IntMatrix{{1, 2}, {2, 4}});
      FAIL("accepted a singular matrix");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RankDeficient);
    }
  }

  SUBCASE("random matrices") {
    std::mt19937 rng(83);
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = 1 + t % 4;
      IntMatrix a = oracle::random_full_rank(rng, k, -3, 3);
      auto s = spectral_summary(a);
      unsigned total = 0;
      for (const auto& r : s.roots) total += r.multiplicity;
      CHECK(total == k);
      const Integer c0 = s.char_poly.coeff(0);
      CHECK((k % 2 ? Integer(-c0) : c0) == det(a));
      REQUIRE(s.resolved());
      for (std::size_t i = 0; i < s.roots.size(); ++i) {
        const auto& f = s.ratio_flags[i];
        if (f.kind == RatioKind::RootOfUnity && !s.roots[i].is_real) {
          CHECK(poly_gcd(ratio_polynomial(s.char_poly).reduced, cyclotomic(f.order)).degree() > 0);
        }
        const C z = oracle::to_complex(s.roots[i].center);
        const unsigned long expect = numeric_order(std::conj(z) / z, 2 * k * k * k * k);
        if (f.kind == RatioKind::RootOfUnity) CHECK(f.order == expect);
        if (f.kind == RatioKind::NotRootOfUnity) CHECK(expect == 0);
      }
    }
  }
}
