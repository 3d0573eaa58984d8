#include <gtest/gtest.h>

#include "shortlex/combinatorics.hpp"
#include "shortlex/power_series.hpp"

namespace shortlex {
namespace {

std::vector<BigRational> ints(std::initializer_list<long> v) {
  std::vector<BigRational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(PowerSeries, ArithmeticBasics) {
  auto one_plus_z = PowerSeries::linear(5, 1, 1);
  auto inv = one_plus_z.reciprocal();
  EXPECT_EQ(inv.coefficients(), ints({1, -1, 1, -1, 1, -1}));
  auto prod = one_plus_z * inv;
  EXPECT_EQ(prod, PowerSeries::constant(5, 1));
  EXPECT_THROW(PowerSeries::linear(3, 0, 1).reciprocal(), DomainError);
}

TEST(PowerSeries, BinomialSquareRootSquares) {
  auto root = PowerSeries::binomial_power(12, BigRational(-8), BigRational(1, 2));
  EXPECT_TRUE(root.integral());
  EXPECT_EQ(root * root, PowerSeries::linear(12, 1, -8));
  auto inv_root = PowerSeries::binomial_power(12, BigRational(-8), BigRational(-1, 2));
  EXPECT_EQ(root * inv_root, PowerSeries::constant(12, 1));
  // (1-8z)^{-1/2} = sum C_t z^t
  for (long t = 0; t <= 12; ++t) EXPECT_EQ(inv_root[static_cast<std::size_t>(t)], BigRational(central_C(t)));
}

TEST(PowerSeries, ShiftDownRequiresVanishingTerms) {
  auto s = PowerSeries::linear(4, 0, 3);
  EXPECT_EQ(s.shifted_down(1).order(), 3u);
  EXPECT_EQ(s.shifted_down(1)[0], 3);
  EXPECT_THROW(PowerSeries::linear(4, 1, 3).shifted_down(1), DomainError);
  EXPECT_EQ(s.shifted_up(2)[3], 3);
}

TEST(Series, Examples) {
  EXPECT_EQ(series(SeriesName::D, 3).coefficients(), ints({0, 1, 3, 21}));
  EXPECT_EQ(series(SeriesName::C, 2).coefficients(), ints({0, 4, 24}));
  EXPECT_EQ(series(SeriesName::X, 2).coefficients(), ints({0, 2, 8}));
  EXPECT_THROW(series("Q", 3), DomainError);
  EXPECT_THROW(series(SeriesName::C, 0), DomainError);
}

TEST(Series, CoefficientsMatchDirectSums) {
  const std::size_t order = 40;
  auto c = series(SeriesName::C, order), d = series(SeriesName::D, order), b = series(SeriesName::B, order),
       t = series(SeriesName::T, order), p = series(SeriesName::P, order);
  EXPECT_EQ(c[0], 0);
  EXPECT_EQ(d[0], 0);
  for (long i = 1; i <= static_cast<long>(order); ++i) {
    auto k = static_cast<std::size_t>(i);
    EXPECT_EQ(c[k], BigRational(central_C(i))) << i;
    EXPECT_EQ(d[k], BigRational(central_D(i))) << i;
    EXPECT_EQ(b[k], BigRational(central_B(i))) << i;
    EXPECT_EQ(t[k], BigRational(class_size(3 * i + 2) / 4)) << i;
    BigInt direct_p, direct_t;
    for (long j = 0; j <= i - 1; ++j) direct_p += u_count(3 * i, j);
    for (long j = 0; 2 * j <= 3 * i; ++j) direct_t += u_count(3 * i, j);
    EXPECT_EQ(p[k], BigRational(direct_p)) << i;
    EXPECT_EQ(t[k], BigRational(direct_t)) << i;
  }
}

TEST(Series, XSolvesQuadratic) {
  const std::size_t order = 25;
  auto x = series(SeriesName::X, order);
  auto y = PowerSeries::constant(order, 1) + x;
  EXPECT_EQ(x, PowerSeries::linear(order, 0, 2) * y * y);
}

}  // namespace
}  // namespace shortlex
