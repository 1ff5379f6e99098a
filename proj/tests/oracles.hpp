#pragma once

// Test-only reference computations. Each one reaches its answer by a route
// that shares no code with the library function it is compared against.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "monodeg/exact.hpp"
#include "monodeg/spectra.hpp"

namespace monodeg::oracle {

using RatPoly = std::vector<Rational>;  // ascending, may carry trailing zeros

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t k, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_full_rank(std::mt19937& rng, std::size_t k, long lo, long hi) {
  for (;;) {
    IntMatrix m = random_matrix(rng, k, lo, hi);
    if (det(m) != 0) return m;
  }
}

/// Product of random elementary row operations and sign flips.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t k, int steps) {
  IntMatrix m = IntMatrix::identity(k);
  std::uniform_int_distribution<std::size_t> idx(0, k - 1);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    long c = mult(rng);
    for (std::size_t col = 0; col < k; ++col) m(i, col) += c * m(j, col);
  }
  return m;
}

/// Row-by-column inner products, column-major traversal.
inline IntMatrix schoolbook_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Integer s = 0;
      for (std::size_t l = 0; l < a.dim(); ++l) s += a(i, l) * b(l, j);
      r(i, j) = s;
    }
  }
  return r;
}

/// Cofactor expansion along the first row.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Integer term = m[0][c] * cofactor_det(minor);
    if (c % 2) d -= term;
    else d += term;
  }
  return d;
}

/// Degree of the monomial map read off its homogenization: write the k+1
/// coordinates [1 : x^{a_1}/x_0^{s_1} : ... ] as Laurent monomials in
/// x_0..x_k, multiply through by the least monomial that clears every negative
/// exponent, and report the largest total degree among the coordinates.
inline Integer homogenization_degree(const IntMatrix& a) {
  const std::size_t k = a.dim();
  std::vector<std::vector<Integer>> expo(k + 1, std::vector<Integer>(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    Integer rowsum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      expo[i + 1][j + 1] = a(i, j);
      rowsum += a(i, j);
    }
    expo[i + 1][0] = -rowsum;
  }
  std::vector<Integer> shift(k + 1, 0);
  for (std::size_t v = 0; v <= k; ++v) {
    Integer lowest = expo[0][v];
    for (std::size_t c = 1; c <= k; ++c) lowest = std::min(lowest, expo[c][v]);
    shift[v] = -lowest;
  }
  Integer best = 0;
  for (std::size_t c = 0; c <= k; ++c) {
    Integer total = 0;
    for (std::size_t v = 0; v <= k; ++v) {
      Integer e = expo[c][v] + shift[v];
      if (e < 0) return -1;  // homogenization failed to clear a pole
      total += e;
    }
    best = std::max(best, total);
  }
  return best;
}

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

inline RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Resultant through the Euclidean remainder sequence over Q:
/// Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r), r = f mod g.
inline Rational euclid_resultant(RatPoly f, RatPoly g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  if (n == 0) {
    Rational r = 1;
    for (std::size_t i = 0; i < m; ++i) r *= g[0];
    return r;
  }
  if (m == 0) {
    Rational r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= f[0];
    return r;
  }
  RatPoly r = rat_mod(f, g);
  Rational sign = ((m * n) % 2) ? -1 : 1;
  if (r.empty()) return 0;
  Rational lc_pow = 1;
  for (std::size_t i = 0; i < m - (r.size() - 1); ++i) lc_pow *= g.back();
  return sign * lc_pow * euclid_resultant(g, r);
}

/// Rank over Q by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

/// Minimal recurrence order of a sequence read as the rank of its square
/// Hankel matrix (valid when the window holds at least twice the order).
inline std::size_t hankel_order(const std::vector<Rational>& s) {
  const std::size_t h = s.size() / 2;
  std::vector<std::vector<Rational>> m(h, std::vector<Rational>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) m[i][j] = s[i + j];
  return rational_rank(std::move(m));
}

// Floating-point roots by Durand-Kerner; independent of the certified path
// and only trusted to a tolerance. Intended for squarefree p.
inline std::vector<std::complex<long double>> numeric_roots(const IntPoly& p) {
  using C = std::complex<long double>;
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<C> a;
  for (const auto& c : p.coeffs()) a.emplace_back(c.get_d() / p.leading().get_d(), 0);
  auto eval = [&a](C z) {
    C acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
    return acc;
  };
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<int>(i));
  for (int it = 0; it < 2000; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      z[i] -= eval(z[i]) / den;
    }
  }
  return z;
}

inline std::complex<long double> to_complex(const ComplexRational& z) {
  return {static_cast<long double>(z.re.get_d()), static_cast<long double>(z.im.get_d())};
}

}  // namespace monodeg::oracle
