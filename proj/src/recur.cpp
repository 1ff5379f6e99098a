#include "monodeg/recur.hpp"

#include <cstdint>
#include <sstream>

namespace monodeg {

std::vector<Rational> Recurrence::polynomial() const {
  std::vector<Rational> p = coefficients;
  p.emplace_back(1);
  return p;
}

std::optional<IntPoly> Recurrence::integer_polynomial() const {
  std::vector<Integer> c;
  for (const auto& q : polynomial()) {
    if (q.get_den() != 1) return std::nullopt;
    c.push_back(q.get_num());
  }
  return IntPoly(std::move(c));
}

Recurrence Recurrence::from_polynomial(const IntPoly& monic) {
  if (!monic.is_monic() || monic.degree() < 1) {
    throw Error(ErrorCode::InvalidArgument, "recurrence polynomial must be monic of positive degree");
  }
  Recurrence r;
  for (int i = 0; i < monic.degree(); ++i) r.coefficients.emplace_back(monic.coeffs()[static_cast<std::size_t>(i)]);
  return r;
}

std::string Recurrence::to_string(char var) const {
  std::ostringstream os;
  const auto p = polynomial();
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& a = p[i];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool Recurrence::same_relation(const Recurrence& other) const {
  return coefficients == other.coefficients;
}

std::optional<Recurrence> berlekamp_massey(std::span<const Rational> seq) {
  if (seq.empty()) throw Error(ErrorCode::InvalidArgument, "empty sequence");
  // Connection polynomial c(x) = 1 + c_1 x + ... + c_L x^L with
  // s_n + c_1 s_{n-1} + ... + c_L s_{n-L} = 0.
  std::vector<Rational> c{1}, b{1};
  std::size_t len = 0, shift = 1;
  Rational last_disc = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational d = seq[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * seq[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational factor = d / last_disc;
    std::vector<Rational> next = c;
    if (next.size() < b.size() + shift) next.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] -= factor * b[i];
    if (2 * len <= n) {
      b = c;
      len = n + 1 - len;
      last_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  if (len > seq.size() / 2) return std::nullopt;
  Recurrence r;
  if (len == 0) {
    r.coefficients = {Rational(0)};
    return r;
  }
  c.resize(len + 1);
  r.coefficients.resize(len);
  for (std::size_t j = 0; j < len; ++j) r.coefficients[j] = c[len - j];
  return r;
}

std::optional<Recurrence> berlekamp_massey(std::span<const Integer> seq) {
  std::vector<Rational> q(seq.begin(), seq.end());
  return berlekamp_massey(std::span<const Rational>(q));
}

namespace {

// Whether some relation c_0 w_n + ... + c_m w_{n+m} = 0 (c != 0) with
// m <= order could hold for every n on the window. The sliding-window matrix
// with rows (w_r, ..., w_{r+order}) has such a kernel vector over Q only if it
// lacks full column rank over Q; rank mod p never exceeds rank over Q, so a
// full rank mod p rules every relation out.
bool relation_possible(std::span<const Integer> w, std::size_t order) {
  constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;
  const std::size_t cols = order + 1;
  if (w.size() < order + cols) return true;  // too few rows for full rank
  const std::size_t rows = w.size() - order;
  std::vector<std::uint64_t> r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = mpz_fdiv_ui(w[i].get_mpz_t(), kP);
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = r[i + j];
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kP);
  };
  auto inv = [&mul](std::uint64_t a) {
    std::uint64_t result = 1, e = kP - 2;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) return true;  // column dependent on earlier ones
    std::swap(m[piv], m[rank]);
    const std::uint64_t scale = inv(m[rank][c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mul(m[i][c], scale);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + kP - mul(f, m[rank][j])) % kP;
    }
    ++rank;
  }
  return rank < cols;
}

bool holds_at(std::span<const Integer> seq, const Recurrence& rec, std::size_t i0) {
  const std::size_t m = rec.order();
  Rational acc = Rational(seq[i0 + m]);
  for (std::size_t i = 0; i < m; ++i) {
    if (rec.coefficients[i] != 0) acc += rec.coefficients[i] * seq[i0 + i];
  }
  return acc == 0;
}

}  // namespace

std::optional<std::size_t> verify_recurrence(std::span<const Integer> seq, const Recurrence& rec) {
  const std::size_t m = rec.order();
  if (m == 0 || seq.size() < m + 1) {
    throw Error(ErrorCode::InvalidArgument, "sequence too short to verify an order " +
                                                std::to_string(m) + " recurrence");
  }
  // 0-based start positions 0 .. len-m-1; scan from the end for the first failure
  std::size_t start = seq.size() - m;
  while (start > 0 && holds_at(seq, rec, start - 1)) --start;
  const std::size_t suffix = seq.size() - start;
  if (suffix < 2 * m) return std::nullopt;
  return start + 1;
}

std::optional<Recurrence> find_recurrence(std::span<const Integer> seq, std::size_t max_order,
                                          std::size_t guard) {
  if (max_order == 0) throw Error(ErrorCode::InvalidArgument, "max_order must be positive");
  const std::size_t fit = 2 * max_order;
  if (seq.size() < fit + guard) {
    throw Error(ErrorCode::WindowTooShort,
                "need " + std::to_string(fit + guard) + " terms for max_order " +
                    std::to_string(max_order) + " and guard " + std::to_string(guard) + ", got " +
                    std::to_string(seq.size()));
  }
  std::optional<Recurrence> best;
  std::size_t best_end = 0;
  for (std::size_t head = 0; head <= max_order && head + fit <= seq.size(); ++head) {
    const std::size_t end = std::min(seq.size(), head + fit + guard);
    // a winner here must have order <= max_order, and below the best so far
    const std::size_t need = best ? best->order() - 1 : max_order;
    if (need == 0 || !relation_possible(seq.subspan(head, end - head), need)) continue;
    auto candidate = berlekamp_massey(seq.subspan(head, fit));
    if (!candidate) continue;
    if (best && candidate->order() >= best->order()) continue;
    const std::size_t m = candidate->order();
    bool ok = true;
    for (std::size_t i = head; i + m < end && ok; ++i) ok = holds_at(seq, *candidate, i);
    if (!ok) continue;
    best = std::move(candidate);
    best_end = end;
  }
  if (best) {
    auto from = verify_recurrence(seq.first(best_end), *best);
    best->valid_from = from.value_or(1);
  }
  return best;
}

std::optional<std::size_t> check_candidate(std::span<const Integer> seq, const IntPoly& p) {
  Recurrence rec = Recurrence::from_polynomial(p);
  if (seq.size() < rec.order() + 2) {
    throw Error(ErrorCode::InvalidArgument, "sequence shorter than deg p + 2");
  }
  return verify_recurrence(seq, rec);
}

}  // namespace monodeg
