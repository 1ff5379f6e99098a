#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "monodeg/degree.hpp"
#include "monodeg/error.hpp"
#include "oracles.hpp"

using namespace monodeg;

namespace {

const IntMatrix kHP{{-1, 1, 0}, {-1, 0, 1}, {1, 0, 0}};
const IntMatrix kHPInverse{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<FunctionalIndex> brute_force_achieving(const IntMatrix& a) {
  std::vector<FunctionalIndex> all = functional_set(a.dim());
  Integer best = functional_value(all.front(), a);
  for (const auto& c : all) best = std::max(best, functional_value(c, a));
  std::vector<FunctionalIndex> out;
  for (const auto& c : all)
    if (functional_value(c, a) == best) out.push_back(c);
  return out;
}

IntMatrix permutation(std::vector<std::size_t> perm) {
  IntMatrix p(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1;
  return p;
}

}  // namespace

TEST_CASE("functional_set") {
  CHECK(functional_set(1).size() == 4);
  CHECK(functional_set(2).size() == 27);
  CHECK(functional_set(3).size() == 256);
  auto set = functional_set(3);
  CHECK(std::is_sorted(set.begin(), set.end()));
  CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
  CHECK(set.front().choices == std::vector<unsigned>{0, 0, 0, 0});
  CHECK(set.back().choices == std::vector<unsigned>{3, 3, 3, 3});
}

TEST_CASE("functional_value") {
  for (const auto& c : functional_set(3)) {
    if (std::all_of(c.choices.begin(), c.choices.end(), [](unsigned v) { return v == 0; }))
      CHECK(functional_value(c, kHP) == 0);
  }
  CHECK(functional_value(FunctionalIndex{{3, 2, 0, 0}}, kHP) == 2);
  CHECK(functional_value(FunctionalIndex{{1, 0, 0, 0}}, IntMatrix::identity(3)) == 1);
  CHECK_THROWS_AS(functional_value(FunctionalIndex{{1, 0}}, kHP), Error);
  CHECK_THROWS_AS(functional_value(FunctionalIndex{{4, 0, 0, 0}}, kHP), Error);
}

TEST_CASE("degree") {
  CHECK(degree(kHP) == 2);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(degree(IntMatrix::identity(k)) == 1);
  CHECK(degree(-IntMatrix::identity(3)) == 3);
  CHECK_THROWS_AS(degree(IntMatrix(3)), Error);
}

TEST_CASE("achieving_cells") {
  auto cells = achieving_cells(IntMatrix{{2}});
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].choices == std::vector<unsigned>{1, 0});
  CHECK(achieving_cells(IntMatrix::identity(3)).size() > 1);
  CHECK(achieving_cells(IntMatrix::identity(3)) == brute_force_achieving(IntMatrix::identity(3)));

  std::mt19937 rng(41);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = oracle::random_matrix(rng, 1 + t % 3, -3, 3);
    if (a.is_zero()) continue;
    auto fast = achieving_cells(a);
    CHECK_FALSE(fast.empty());
    CHECK(fast == brute_force_achieving(a));
    auto canon = canonical_cell(a);
    CHECK(canon.index == fast.front());
    CHECK(canon.tie_count == fast.size());
  }
}

TEST_CASE("degree properties on random matrices") {
  std::mt19937 rng(43);

  SUBCASE("max of the functional family") {
    for (int t = 0; t < 200; ++t) {
      IntMatrix a = oracle::random_matrix(rng, 1 + t % 3, -4, 4);
      if (a.is_zero()) continue;
      Integer d = degree(a);
      CHECK(d >= 1);
      bool attained = false;
      for (const auto& c : functional_set(a.dim())) {
        Integer v = functional_value(c, a);
        CHECK(v <= d);
        attained = attained || v == d;
      }
      CHECK(attained);
    }
  }

  SUBCASE("homogenization oracle") {
    for (int t = 0; t < 50; ++t) {
      IntMatrix a = oracle::random_matrix(rng, 1 + t % 4, -5, 5);
      if (a.is_zero()) continue;
      CHECK(degree(a) == oracle::homogenization_degree(a));
    }
  }

  SUBCASE("submultiplicative along powers") {
    for (int t = 0; t < 20; ++t) {
      IntMatrix a = oracle::random_full_rank(rng, 2 + t % 3, -3, 3);
      for (unsigned m = 1; m < 10; ++m)
        for (unsigned n = 1; m + n <= 10; ++n)
          CHECK(degree(mat_pow(a, m + n)) <= degree(mat_pow(a, m)) * degree(mat_pow(a, n)));
    }
  }

  SUBCASE("invariant under relabeling coordinates") {
    for (int t = 0; t < 30; ++t) {
      const std::size_t k = 2 + t % 3;
      IntMatrix a = oracle::random_matrix(rng, k, -4, 4);
      if (a.is_zero()) continue;
      std::vector<std::size_t> p(k), q(k);
      std::iota(p.begin(), p.end(), 0);
      std::iota(q.begin(), q.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      std::shuffle(q.begin(), q.end(), rng);
      CHECK(degree(mat_mul(permutation(p), mat_mul(a, permutation(q)))) == degree(a));
    }
  }
}

TEST_CASE("degree_sequence") {
  CHECK(degree_sequence(kHP, 4).terms == ints({2, 3, 4, 6}));
  CHECK(degree(IntMatrix{{-3, 2, 0}, {-2, -1, 2}, {2, 0, -1}}) == 6);
  CHECK(mat_pow(kHP, 4) == IntMatrix{{-3, 2, 0}, {-2, -1, 2}, {2, 0, -1}});
  CHECK(degree_sequence(kHPInverse, 5).terms == ints({2, 4, 7, 13, 24}));
  CHECK(degree_sequence(IntMatrix::identity(3), 5).terms == ints({1, 1, 1, 1, 1}));

  auto seq = degree_sequence(kHP, 30);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(seq.terms[n - 1] == degree(mat_pow(kHP, n)));
  CHECK_FALSE(seq.dual);

  try {
    degree_sequence(IntMatrix{{1, 2}, {2, 4}}, 3);
    FAIL("singular matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
  CHECK_THROWS_AS(degree_sequence(kHP, 0), Error);
}

TEST_CASE("dual_degree_sequence") {
  auto dual = dual_degree_sequence(kHP, 5);
  CHECK(dual.terms == ints({2, 4, 7, 13, 24}));
  CHECK(dual.dual);
  CHECK(dual.source == kHP);
  CHECK(dual_degree_sequence(IntMatrix::identity(3), 4).terms == ints({1, 1, 1, 1}));
  try {
    dual_degree_sequence(IntMatrix{{2, 0}, {0, 3}}, 3);
    FAIL("non-unimodular matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnimodular);
  }

  std::mt19937 rng(47);
  for (int t = 0; t < 20; ++t) {
    IntMatrix a = oracle::random_unimodular(rng, 2 + t % 3, 10);
    CHECK(dual_degree_sequence(a, 12).terms == degree_sequence(inverse_unimodular(a), 12).terms);
  }
}
