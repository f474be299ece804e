#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "linerec/exactmath.hpp"

using namespace linerec;

namespace {

RatMatrix random_matrix(std::size_t r, std::size_t c, int spread, std::mt19937_64& rng) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
  return m;
}

bool times_is_zero(const RatMatrix& m, const RatMatrix& kernel_rows) {
  for (std::size_t k = 0; k < kernel_rows.rows(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * kernel_rows(k, j);
      if (s != 0) return false;
    }
  return true;
}

}  // namespace

TEST(Rank, Identity) { EXPECT_EQ(rank(RatMatrix{{1, 0}, {0, 1}}), 2u); }

TEST(Rank, ZeroMatrix) { EXPECT_EQ(rank(RatMatrix(3, 4)), 0u); }

TEST(Rank, ScalarMultipleRows) { EXPECT_EQ(rank(RatMatrix{{1, -1, 1}, {2, -2, 2}}), 1u); }

TEST(Rank, IntegerAndRationalAgreeWithOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % 6;
    const RatMatrix q = random_matrix(r, c, 2, rng);
    IntMatrix z(r, c);
    std::vector<std::vector<std::int64_t>> plain(r, std::vector<std::int64_t>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        z(i, j) = q(i, j).get_num();
        plain[i][j] = q(i, j).get_num().get_si();
      }
    const auto expected = static_cast<std::size_t>(oracle::rank_small(plain));
    EXPECT_EQ(rank(q), expected);
    EXPECT_EQ(rank(z), expected);
  }
}

TEST(Kernel, SingleRow) {
  const RatMatrix m{{1, -1, 1}};
  const RatMatrix k = right_kernel_basis(m);
  ASSERT_EQ(k.rows(), 2u);
  EXPECT_TRUE(times_is_zero(m, k));
  EXPECT_EQ(rank(k), 2u);
}

TEST(Kernel, IdentityHasTrivialKernel) { EXPECT_EQ(right_kernel_basis(RatMatrix{{1, 0}, {0, 1}}).rows(), 0u); }

TEST(Kernel, ZeroRowGivesIdentity) {
  const RatMatrix k = right_kernel_basis(RatMatrix(1, 3));
  EXPECT_EQ(k, (RatMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Kernel, RankNullityProperty) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const RatMatrix m = random_matrix(1 + rng() % 5, 1 + rng() % 7, 3, rng);
    const RatMatrix k = right_kernel_basis(m);
    EXPECT_EQ(rank(m) + k.rows(), m.cols());
    EXPECT_TRUE(times_is_zero(m, k));
    if (k.rows() > 0) {
      EXPECT_EQ(rank(k), k.rows());
    }
  }
}

TEST(Rref, Examples) {
  EXPECT_EQ(rref(RatMatrix{{1, 0}, {0, 1}}), (RatMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(rref(RatMatrix{{2, 4}, {1, 2}}), (RatMatrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(rref(RatMatrix{{0, 1}, {1, 0}}), (RatMatrix{{1, 0}, {0, 1}}));
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const RatMatrix r = rref(random_matrix(1 + rng() % 5, 1 + rng() % 6, 4, rng));
    EXPECT_EQ(rref(r), r);
  }
}

TEST(Rational, ArithmeticMatchesSmallIntegerFractions) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const long a = static_cast<long>(rng() % 41) - 20;
    const long b = 1 + static_cast<long>(rng() % 20);
    const long c = static_cast<long>(rng() % 41) - 20;
    const long d = 1 + static_cast<long>(rng() % 20);
    Rational sum = Rational(a, b) + Rational(c, d);
    sum.canonicalize();
    // a/b + c/d = (ad + cb) / bd, compared by cross multiplication
    const long num = a * d + c * b;
    const long den = b * d;
    EXPECT_EQ(sum.get_num() * den, BigInt(num) * sum.get_den());
    EXPECT_EQ(gcd(sum.get_num(), sum.get_den()), sgn(sum) == 0 ? sum.get_den() : BigInt(1));
  }
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant(RatMatrix{{2, 1}, {1, 1}}), Rational(1));
  EXPECT_EQ(determinant(RatMatrix{{1, 2}, {2, 4}}), Rational(0));
  EXPECT_EQ(determinant(RatMatrix{{0, 1}, {1, 0}}), Rational(-1));
}

TEST(CanonicalRowBasis, PrimitivePositiveLeading) {
  const IntMatrix b = canonical_row_basis(RatMatrix{{-2, 2, -2}, {Rational(1, 2), Rational(-1, 2), Rational(1, 2)}});
  EXPECT_EQ(b, (IntMatrix{{1, -1, 1}}));
}

TEST(PrimitiveVector, ClearsDenominators) {
  const std::vector<Rational> v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  EXPECT_EQ(primitive_integer_vector(v), (std::vector<BigInt>{2, -3, 0}));
}

TEST(RoundNearest, HalvesGoUp) {
  EXPECT_EQ(round_nearest(Rational(14, 3)), BigInt(5));
  EXPECT_EQ(round_nearest(Rational(-7, 2)), BigInt(-3));
  EXPECT_EQ(round_nearest(Rational(5, 2)), BigInt(3));
}
