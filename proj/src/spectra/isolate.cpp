#include "spectra/isolate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spectra/ball.hpp"

namespace monodeg {

Rational separation_bound_squared(const IntPoly& p) {
  const long d = p.degree();
  if (d < 2) return 1;
  Integer norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), Integer(d).get_mpz_t(), static_cast<unsigned long>(d + 2));
  Integer np;
  mpz_pow_ui(np.get_mpz_t(), norm2.get_mpz_t(), static_cast<unsigned long>(d - 1));
  return make_rational(3, den * np);
}

}  // namespace monodeg

namespace monodeg::detail {

namespace {

Integer shl(const Integer& x, unsigned long b) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), b);
  return r;
}

Integer shr(const Integer& x, unsigned long b) {
  Integer r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), b);
  return r;
}

unsigned bit_length(const Integer& x) {
  return x == 0 ? 0 : static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

}  // namespace

Isolator::Isolator(IntPoly p) : p_(std::move(p)), n_(static_cast<std::size_t>(p_.degree())) {
  const Rational sep2 = separation_bound_squared(p_);
  // sep >= 2^-separation_bits_
  separation_bits_ = (bit_length(sep2.get_den()) + 1) / 2 + 1;
}

void Isolator::seed(unsigned work) {
  // Points on a circle whose radius is the geometric mean of the root moduli.
  long e0 = 0, en = 0;
  const double m0 = mpz_get_d_2exp(&e0, p_.coeffs().front().get_mpz_t());
  const double mn = mpz_get_d_2exp(&en, p_.leading().get_mpz_t());
  const double log_ratio = std::log2(std::abs(m0)) + static_cast<double>(e0) -
                           std::log2(std::abs(mn)) - static_cast<double>(en);
  const double radius = std::exp2(log_ratio / static_cast<double>(n_));
  z_.assign(n_, {});
  constexpr unsigned kSeedBits = 40;
  for (std::size_t j = 0; j < n_; ++j) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_) + 0.4;
    const Integer re(std::ldexp(radius * std::cos(theta), kSeedBits));
    const Integer im(std::ldexp(radius * std::sin(theta), kSeedBits));
    z_[j] = {shl(re, work - kSeedBits), shl(im, work - kSeedBits)};
  }
  work_ = work;
}

void Isolator::iterate() {
  const unsigned w = work_;
  const Integer one = shl(Integer(1), w);
  auto mul = [w](const Fixed& a, const Fixed& b) {
    return Fixed{shr(a.re * b.re - a.im * b.im, w), shr(a.re * b.im + a.im * b.re, w)};
  };
  // nullopt-free: callers avoid zero divisors
  auto div = [w](const Fixed& a, const Fixed& b) {
    const Integer d = b.re * b.re + b.im * b.im;
    Integer re = shl(a.re * b.re + a.im * b.im, w);
    Integer im = shl(a.im * b.re - a.re * b.im, w);
    mpz_fdiv_q(re.get_mpz_t(), re.get_mpz_t(), d.get_mpz_t());
    mpz_fdiv_q(im.get_mpz_t(), im.get_mpz_t(), d.get_mpz_t());
    return Fixed{re, im};
  };
  auto is_zero = [](const Fixed& a) { return a.re == 0 && a.im == 0; };

  std::vector<Integer> coeffs;
  for (const auto& c : p_.coeffs()) coeffs.push_back(shl(c, w));
  const Integer nudge = shr(one, w / 2);

  // Stop once every correction is at the noise floor of the fixed-point grid.
  const Integer floor_units = 64;
  const std::size_t max_iter = 200 + 20 * n_;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    Integer largest = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      Fixed pv{0, 0}, dv{0, 0};
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        dv = mul(dv, z_[i]);
        dv.re += pv.re;
        dv.im += pv.im;
        pv = mul(pv, z_[i]);
        pv.re += coeffs[k];
      }
      if (is_zero(pv)) continue;
      if (is_zero(dv)) {
        z_[i].re += nudge;
        largest = std::max(largest, nudge);
        continue;
      }
      const Fixed ratio = div(pv, dv);
      Fixed sum{0, 0};
      bool collided = false;
      for (std::size_t j = 0; j < n_ && !collided; ++j) {
        if (j == i) continue;
        const Fixed diff{z_[i].re - z_[j].re, z_[i].im - z_[j].im};
        if (is_zero(diff)) {
          collided = true;
          break;
        }
        const Fixed inv = div(Fixed{one, 0}, diff);
        sum.re += inv.re;
        sum.im += inv.im;
      }
      if (collided) {
        z_[i].im += nudge;
        largest = std::max(largest, nudge);
        continue;
      }
      const Fixed rs = mul(ratio, sum);
      const Fixed denom{one - rs.re, -rs.im};
      const Fixed step = is_zero(denom) ? ratio : div(ratio, denom);
      z_[i].re -= step.re;
      z_[i].im -= step.im;
      largest = std::max({largest, Integer(abs(step.re)), Integer(abs(step.im))});
    }
    if (largest <= floor_units) break;
  }
}

bool Isolator::certify(unsigned bits) {
  const Rational limit = ldexp(Rational(1), -static_cast<long>(bits));
  std::vector<Disk> disks(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    disks[i].center = {ldexp(Rational(z_[i].re), -static_cast<long>(work_)),
                       ldexp(Rational(z_[i].im), -static_cast<long>(work_))};
  }
  const ComplexRational lc{Rational(p_.leading()), Rational(0)};
  for (std::size_t i = 0; i < n_; ++i) {
    ComplexRational den = lc;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      const ComplexRational diff = disks[i].center - disks[j].center;
      if (diff.re == 0 && diff.im == 0) return false;
      den = den * diff;
    }
    const Rational w2 = norm2(eval(p_, disks[i].center)) / norm2(den);
    Rational r = static_cast<long>(n_) * sqrt_upper(w2, 32);
    if (r == 0) r = ldexp(limit, -2);  // centre is an exact root; keep radii positive
    if (r > limit) return false;
    disks[i].radius = r;
  }

  auto pairwise_disjoint = [&disks, this] {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (meets(disks[i], disks[j])) return false;
    return true;
  };
  if (!pairwise_disjoint()) return false;

  // Conjugation permutes the roots. If conj(D_i) meets D_i only, the root in
  // D_i is its own conjugate; if it meets exactly one other D_j, the roots of
  // D_i and D_j are conjugate.
  std::vector<RootBox> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const Disk mirrored{conj(disks[i].center), disks[i].radius};
    auto hit = unique_meeting(mirrored, disks);
    if (!hit) return false;
    out[i].is_real = *hit == i;
    if (!out[i].is_real) out[i].conjugate_partner = *hit;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (out[i].conjugate_partner && out[*out[i].conjugate_partner].conjugate_partner != i) return false;
  }
  // A real root lies on the axis, so moving the centre there keeps it inside.
  for (std::size_t i = 0; i < n_; ++i)
    if (out[i].is_real) disks[i].center.im = 0;
  if (!pairwise_disjoint()) return false;

  for (std::size_t i = 0; i < n_; ++i) {
    out[i].center = disks[i].center;
    out[i].radius = disks[i].radius;
  }
  boxes_ = std::move(out);
  certified_ = true;
  certified_bits_ = bits;
  return true;
}

const std::vector<RootBox>& Isolator::boxes(unsigned bits) {
  if (certified_ && certified_bits_ >= bits) return boxes_;
  unsigned log_n = 0;
  while ((std::size_t{1} << log_n) < n_) ++log_n;
  unsigned work = std::max(work_, bits + 2 * log_n + 40);
  // Past this working precision the approximations are far below the root
  // separation, so failure would mean the iteration itself stalled.
  const unsigned cap = 8 * (bits + separation_bits_) + 64 * static_cast<unsigned>(n_) + 1024;
  if (z_.empty()) seed(work);
  for (;;) {
    if (work > work_) {
      for (auto& z : z_) {
        z.re = shl(z.re, work - work_);
        z.im = shl(z.im, work - work_);
      }
      work_ = work;
    }
    iterate();
    if (certify(bits)) return boxes_;
    if (work >= cap) throw std::runtime_error("root isolation did not converge for " + p_.to_string());
    work = std::min(cap, work + work / 2);
  }
}

}  // namespace monodeg::detail
