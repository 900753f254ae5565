#include <gtest/gtest.h>

#include <random>

#include "lindep/charpoly.hpp"
#include "lindep/errors.hpp"
#include "oracles.hpp"

using namespace lindep;
using graph::IntMatrix;

namespace {

ExactPoly P(std::vector<long long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return ExactPoly(b);
}

IntMatrix from_rows(std::vector<std::vector<std::int64_t>> rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi, bool symmetric) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      m(i, j) = d(rng);
      if (symmetric) m(j, i) = m(i, j);
    }
  return m;
}

}  // namespace

TEST(Charpoly, SmallExamples) {
  const auto k2 = from_rows({{0, 1}, {1, 0}});
  const auto k3 = from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto lstar = from_rows({{3, -1, -1, -1}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}});
  for (auto engine : {&spectra::charpoly_exact, &spectra::charpoly_berkowitz,
                      &spectra::charpoly_naive}) {
    EXPECT_EQ(engine(k2), P({-1, 0, 1}));
    EXPECT_EQ(engine(k3), P({-2, -3, 0, 1}));
    EXPECT_EQ(engine(lstar), P({0, -4, 9, -6, 1}));
    EXPECT_EQ(engine(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), P({-1, 3, -3, 1}));
    EXPECT_EQ(engine(IntMatrix(2)), P({0, 0, 1}));
  }
}

TEST(Charpoly, EmptyMatrix) {
  EXPECT_EQ(spectra::charpoly_exact(IntMatrix(0)), P({1}));
}

TEST(Charpoly, NaiveCapacity) {
  EXPECT_THROW(spectra::charpoly_naive(IntMatrix(9)), CapacityError);
}

TEST(Charpoly, EnginesAgreeOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const auto m = random_matrix(rng, n, -5, 5, t % 2 == 0);
    const auto exact = spectra::charpoly_exact(m);
    EXPECT_EQ(exact, spectra::charpoly_naive(m));
    EXPECT_EQ(exact, spectra::charpoly_berkowitz(m));
    EXPECT_EQ(exact, oracle::faddeev_leverrier(m));
  }
}

TEST(Charpoly, LargerEntriesAndOrders) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 6; ++t) {
    const auto m = random_matrix(rng, 12 + t * 3, -1000, 1000, false);
    EXPECT_EQ(spectra::charpoly_exact(m), spectra::charpoly_berkowitz(m));
  }
}

TEST(Charpoly, CoefficientBound) {
  const auto m = from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(spectra::charpoly_coefficient_bound(m), 4);
}

TEST(Bareiss, Determinants) {
  EXPECT_EQ(spectra::determinant_bareiss({{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(spectra::determinant_bareiss({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(spectra::determinant_bareiss({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(spectra::determinant_bareiss({}), 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const auto m = random_matrix(rng, n, -4, 4, false);
    std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    // det(M) = (-1)^n charpoly(0)
    BigInt want = spectra::charpoly_naive(m).coeff(0);
    if (n % 2 == 1) want = -want;
    EXPECT_EQ(spectra::determinant_bareiss(rows), want);
  }
}

TEST(Detail, MillerRabin) {
  using spectra::detail::is_prime_u64;
  EXPECT_FALSE(is_prime_u64(1));
  EXPECT_TRUE(is_prime_u64(2));
  EXPECT_TRUE(is_prime_u64(4611686018427387847ull));  // 2^62 - 57
  EXPECT_FALSE(is_prime_u64(3215031751ull));          // strong pseudoprime to 2,3,5,7
  for (std::uint64_t n = 2; n < 2000; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    EXPECT_EQ(is_prime_u64(n), prime) << n;
  }
}
