#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace monodeg::detail {

// Fraction-free Gaussian elimination over an integral domain. `div` must
// perform exact division; Sylvester's identity guarantees every quotient
// formed here is exact.
template <class T, class ExactDiv, class IsZero>
T bareiss_det(std::vector<std::vector<T>> m, const T& one, ExactDiv div, IsZero is_zero) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return T{};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  T result = m[n - 1][n - 1];
  if (negate) result = -result;
  return result;
}

}  // namespace monodeg::detail
