#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "klc/algnum.hpp"

using namespace klc;

namespace {

const QuadNum kRoot5(0, 1, 5);

QuadNum random_value(std::mt19937& rng, std::int64_t d) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  return QuadNum(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
}

}  // namespace

TEST(QuadNum, Examples) {
  const QuadNum a = 1 + kRoot5;
  const QuadNum b = 1 - kRoot5;
  EXPECT_EQ(a * b, QuadNum(-4));
  EXPECT_EQ(QuadNum(2).inverse(), QuadNum(Rational(1, 2)));
  EXPECT_EQ(a * a, QuadNum(6, 2, 5));
  EXPECT_NEAR((a * a).to_double(), std::pow(1 + std::sqrt(5.0), 2), 1e-12);
}

TEST(QuadNum, Display) {
  EXPECT_EQ((1 + kRoot5).to_string(), "1+√5");
  EXPECT_EQ((1 - kRoot5).to_string(), "1-√5");
  EXPECT_EQ(QuadNum(Rational(3, 4)).to_string(), "3/4");
  EXPECT_EQ(QuadNum(0, 2, 5).to_string(), "2√5");
  EXPECT_EQ(QuadNum(-7).to_string(), "-7");
  EXPECT_EQ(QuadNum(0).to_string(), "0");
}

TEST(QuadNum, Normalization) {
  // sqrt(8) = 2 sqrt(2); sqrt(9) is rational
  EXPECT_EQ(QuadNum(0, 1, 8), QuadNum(0, 2, 2));
  EXPECT_TRUE(QuadNum(1, 1, 9).is_rational());
  EXPECT_EQ(QuadNum(1, 1, 9), QuadNum(4));
  EXPECT_TRUE(QuadNum(3, 0, 5).is_rational());
  EXPECT_EQ(QuadNum(3, 0, 5), QuadNum(3));
}

TEST(QuadNum, Errors) {
  EXPECT_THROW(QuadNum(0).inverse(), std::domain_error);
  EXPECT_THROW(QuadNum(1) / QuadNum(0), std::domain_error);
  EXPECT_THROW(QuadNum(0, 1, 2) + QuadNum(0, 1, 3), std::domain_error);
  EXPECT_THROW(solve_quadratic_monic(0, -1), std::domain_error);
}

TEST(QuadNum, Compare) {
  EXPECT_GT(1 + kRoot5, 1 - kRoot5);
  EXPECT_GT(4 + kRoot5, 4 - kRoot5);
  EXPECT_GT(4 - kRoot5, QuadNum(1));
  EXPECT_LT(QuadNum(2), kRoot5);
  // different fields
  EXPECT_LT(QuadNum(0, 1, 2), QuadNum(0, 1, 3));
  EXPECT_GT(QuadNum(1, 1, 2), QuadNum(0, 1, 5));
}

TEST(QuadNum, SolveQuadratic) {
  auto r = solve_quadratic_monic(2, 4);
  EXPECT_EQ(r[0], 1 - kRoot5);
  EXPECT_EQ(r[1], 1 + kRoot5);
  r = solve_quadratic_monic(2, 0);
  EXPECT_EQ(r[0], QuadNum(0));
  EXPECT_EQ(r[1], QuadNum(2));
  r = solve_quadratic_monic(0, 4);
  EXPECT_EQ(r[0], QuadNum(-2));
  EXPECT_EQ(r[1], QuadNum(2));
  for (const auto& root : solve_quadratic_monic(Rational(3, 2), Rational(7, 3)))
    EXPECT_EQ(root * root, Rational(3, 2) * root + QuadNum(Rational(7, 3)));
}

TEST(QuadNum, SquareFreeSplit) {
  EXPECT_EQ(split_square_free(BigInt(72)), std::make_pair(BigInt(6), BigInt(2)));
  EXPECT_EQ(split_square_free(BigInt(5)), std::make_pair(BigInt(1), BigInt(5)));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(rational_to_string(Rational(10, 4)), "5/2");
}

TEST(QuadNum, FieldAxiomsRandomized) {
  std::mt19937 rng(20240611);
  for (std::int64_t d : {2, 3, 5, 7, 10}) {
    for (int trial = 0; trial < 200; ++trial) {
      const QuadNum x = random_value(rng, d), y = random_value(rng, d), z = random_value(rng, d);
      ASSERT_EQ((x + y) + z, x + (y + z));
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ(x - x, QuadNum(0));
      if (!x.is_zero()) ASSERT_EQ(x * x.inverse(), QuadNum(1));
      // conjugation is a ring homomorphism
      ASSERT_EQ((x + y).conjugate(), x.conjugate() + y.conjugate());
      ASSERT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
    }
  }
}

TEST(QuadNum, CompareAgreesWithFloating) {
  std::mt19937 rng(7);
  const std::int64_t fields[] = {2, 3, 5, 6, 7};
  for (int trial = 0; trial < 2000; ++trial) {
    const QuadNum x = random_value(rng, fields[trial % 5]);
    const QuadNum y = random_value(rng, fields[(trial / 5) % 5]);
    const double dx = x.to_double(), dy = y.to_double();
    if (std::abs(dx - dy) < 1e-9) continue;
    ASSERT_EQ(x < y, dx < dy) << x.to_string() << " vs " << y.to_string();
    ASSERT_EQ(compare(x, y) == 0, false);
  }
  EXPECT_EQ(compare(QuadNum(0, 1, 8), QuadNum(0, 2, 2)), std::strong_ordering::equal);
}
