#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qons/linalg.hpp"
#include "support/random.hpp"

using namespace qons;

namespace {

// Oracle rank: plain Gaussian elimination on a copy, row by row.
std::size_t oracle_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<mpq_class>> rows_of(const RationalMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

// Random symbolic matrix of prescribed low rank: product of random factors.
ScalarMatrix low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  ScalarMatrix a(rows, k), b(k, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = testing::random_scalar(rng, j == 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = testing::random_scalar(rng, false);
  return a * b;
}

}  // namespace

TEST_CASE("rational rref and kernel") {
  RationalMatrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 7;
  const auto e = rref(m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  const auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<mpq_class>{-2, 1, 0});
  const auto s = solve(m, {1, 2});
  CHECK(s.consistent);
  CHECK(s.x == std::vector<mpq_class>{1, 0, 0});
  const auto bad = solve(RationalMatrix(2, 1), {0, 1});
  CHECK_FALSE(bad.consistent);
  CHECK(bad.rank_augmented == 1);
}

TEST_CASE("symbolic kernel of a 2x2 example") {
  const Scalar v = Scalar::var(Var::v1), kp = Scalar::var(Var::kp);
  ScalarMatrix m(2, 3);
  m(0, 0) = kp, m(0, 1) = v, m(0, 2) = Scalar(1);
  m(1, 0) = kp * kp, m(1, 1) = kp * v, m(1, 2) = kp;
  CHECK(rank(m) == 1);
  const auto k = kernel(m);
  REQUIRE(k.size() == 2);
  for (const auto& vec : k) {
    for (std::size_t i = 0; i < 2; ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * vec[j];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("symbolic elimination agrees with rational elimination") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> dim(1, 3);
    const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng) + 1);
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(dim(rng)), std::min(rows, cols));
    const ScalarMatrix m = low_rank(rng, rows, cols, k);
    const auto e = ff_gauss_jordan(m);
    CHECK(e.rank() <= k);
    // Kernel soundness.
    for (const auto& vec : kernel(m)) {
      for (std::size_t i = 0; i < rows; ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * vec[j];
        CHECK(acc.is_zero());
      }
    }
    CHECK(e.rank() + kernel(m).size() == cols);
    // Specialization can only drop rank.
    const auto p = testing::random_point(rng);
    const RationalMatrix mp = evaluate(m, p);
    const auto r_point = oracle_rank(rows_of(mp));
    CHECK(r_point <= e.rank());
    CHECK(rank(mp) == r_point);
  }
}

TEST_CASE("symbolic solve") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) {
    ScalarMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = testing::random_scalar(rng, i == j);
    std::vector<Scalar> x0(3);
    for (auto& x : x0) x = testing::random_scalar(rng);
    std::vector<Scalar> b(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b[i] += a(i, j) * x0[j];
    const auto s = solve(a, b);
    REQUIRE(s.consistent);
    for (std::size_t i = 0; i < 3; ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < 3; ++j) acc += a(i, j) * s.numerators[j];
      CHECK(acc == s.denominator * b[i]);
    }
    if (s.rank_a == 3) {
      for (std::size_t j = 0; j < 3; ++j) {
        const auto v = s.value(j);
        if (v) CHECK(*v == x0[j]);
      }
    }
  }
  ScalarMatrix a(2, 1);
  a(0, 0) = Scalar::var(Var::kp);
  a(1, 0) = Scalar::var(Var::kp) * Scalar::var(Var::v1);
  const auto s = solve(a, {Scalar(1), Scalar(1)});
  CHECK_FALSE(s.consistent);
  CHECK(s.rank_a == 1);
  CHECK(s.rank_augmented == 2);
}

TEST_CASE("term budget") {
  std::mt19937_64 rng(57);
  const ScalarMatrix m = low_rank(rng, 4, 4, 4);
  CHECK_THROWS_AS(ff_gauss_jordan(m, 2), ResourceBudgetExceeded);
}
