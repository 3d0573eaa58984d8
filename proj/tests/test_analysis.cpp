#include <gtest/gtest.h>

#include <cmath>
#include <unordered_map>

#include "shortlex/analysis.hpp"

namespace shortlex {
namespace {

// P(I_n = 1) by summing block probabilities of saved blocks in the explicit codebook.
BigRational saving_by_enumeration(long n) {
  auto book = brute_force_codebook(2 * n);
  std::unordered_map<std::string, std::size_t> len;
  for (const auto& [src, word] : book.entries) len.emplace(src.str(), word.size());
  BigRational p;
  for (const auto& u : enumerate_admissible(static_cast<std::size_t>(n))) {
    if (len.at(u.str()) + 1 == information_cost(u)) p += block_probability(u);
  }
  return p;
}

BigRational saving_by_direct_sum(long n) {
  BigRational p;
  for (long x = 0; x <= n - 1; ++x) p += binomial_weight(n, x) * conditional_saving(n, x);
  return p;
}

TEST(BinomialWeight, Values) {
  EXPECT_EQ(binomial_weight(2, 1), BigRational(1, 2));
  EXPECT_EQ(binomial_weight(3, 1), BigRational(1, 2));
  EXPECT_EQ(binomial_weight(1, 0), 1);
  EXPECT_EQ(binomial_weight(4, 5), 0);
  EXPECT_EQ(binomial_weight(4, -1), 0);
}

TEST(BinomialWeight, Normalized) {
  for (long n = 1; n <= 300; ++n) {
    BigRational s;
    for (long x = 0; x <= n - 1; ++x) s += binomial_weight(n, x);
    EXPECT_EQ(s, 1) << n;
  }
}

TEST(ConditionalSaving, Values) {
  EXPECT_EQ(conditional_saving(2, 0), BigRational(1, 2));
  EXPECT_EQ(conditional_saving(2, 1), BigRational(3, 4));
  EXPECT_EQ(conditional_saving(3, 0), 0);
  EXPECT_THROW(conditional_saving(1, 0), DomainError);
  EXPECT_THROW(conditional_saving(3, 3), DomainError);
  EXPECT_THROW(conditional_saving(3, -1), DomainError);
}

TEST(ConditionalSaving, InUnitInterval) {
  for (long n = 2; n <= 80; ++n) {
    for (long x = 0; x <= n - 1; ++x) {
      auto g = conditional_saving(n, x);
      EXPECT_GE(g, 0);
      EXPECT_LE(g, 1);
    }
  }
}

TEST(SavingProbability, Values) {
  EXPECT_EQ(saving_probability(1), BigRational(1, 2));
  EXPECT_EQ(saving_probability(2), BigRational(5, 8));
  EXPECT_EQ(saving_probability(3), BigRational(9, 16));
  EXPECT_THROW(saving_probability(0), DomainError);
}

TEST(SavingProbability, MatchesEnumeration) {
  for (long n = 1; n <= 7; ++n) EXPECT_EQ(saving_probability(n), saving_by_enumeration(n)) << n;
}

TEST(SavingProbability, FastPathMatchesDirectSum) {
  for (long n = 2; n <= 150; ++n) EXPECT_EQ(saving_probability(n), saving_by_direct_sum(n)) << n;
  for (long n : {257L, 400L}) EXPECT_EQ(saving_probability(n), saving_by_direct_sum(n)) << n;
}

TEST(ExpectedLength, GoldenValues) {
  EXPECT_EQ(expected_length(1), BigRational(3, 2));
  EXPECT_EQ(expected_length(2), BigRational(23, 8));
  EXPECT_EQ(expected_length(3), BigRational(71, 16));
}

TEST(ExpectedLength, BruteForceOracle) {
  EXPECT_EQ(expected_length_bruteforce(1), BigRational(3, 2));
  EXPECT_EQ(expected_length_bruteforce(2), BigRational(23, 8));
  for (long n = 1; n <= 8; ++n) EXPECT_EQ(expected_length(n), expected_length_bruteforce(n)) << n;
  EXPECT_THROW(expected_length_bruteforce(0), DomainError);
  EXPECT_THROW(expected_length_bruteforce(9), DomainError);
}

TEST(SavingLowerBound, Values) {
  EXPECT_EQ(saving_lower_bound(3), BigRational(9, 16));
  EXPECT_EQ(saving_lower_bound(2), BigRational(5, 8));
  EXPECT_EQ(saving_lower_bound(4), BigRational(35, 64));
  EXPECT_THROW(saving_lower_bound(1), DomainError);
}

TEST(SavingProbability, ExceedsHalfUpTo400) {
  for (long n = 1; n <= 400; ++n) {
    auto p = saving_probability(n);
    if (n == 1) {
      EXPECT_EQ(p, BigRational(1, 2));
      continue;
    }
    EXPECT_GT(p, BigRational(1, 2)) << n;
    EXPECT_GE(p, saving_lower_bound(n)) << n;
    EXPECT_LT(expected_length(n), benchmark_length(n)) << n;
  }
}

TEST(OddBlocks, GapEqualsPairingBound) {
  // For odd n every x below the centre has g = 0, so the bound is attained.
  for (long n = 3; n <= 201; n += 2) EXPECT_EQ(saving_probability(n), saving_lower_bound(n)) << n;
}

TEST(CentralConditionals, Values) {
  auto c1 = central_conditionals(1);
  EXPECT_EQ(c1.odd_center, BigRational(5, 8));
  EXPECT_EQ(c1.even_center, BigRational(3, 4));
  EXPECT_EQ(c1.even_left, BigRational(1, 2));
  auto c2 = central_conditionals(2);
  EXPECT_EQ(c2.even_center, BigRational(7, 8));
  EXPECT_EQ(c2.even_left, BigRational(1, 4));
}

TEST(CentralConditionals, MatchConditionalSaving) {
  for (long t = 1; t <= 120; ++t) {
    auto c = central_conditionals(t);
    EXPECT_EQ(c.odd_center, conditional_saving(2 * t + 1, t)) << t;
    EXPECT_EQ(c.even_center, conditional_saving(2 * t, t)) << t;
    EXPECT_EQ(c.even_left, conditional_saving(2 * t, t - 1)) << t;
    EXPECT_EQ(c.even_left + c.even_center, 1 + make_rational(central_D(t), central_C(t))) << t;
  }
}

TEST(TailSaturation, Checks) {
  EXPECT_TRUE(tail_saturation_check(2));
  EXPECT_TRUE(tail_saturation_check(3));
  EXPECT_TRUE(tail_saturation_check(50));
  EXPECT_EQ(conditional_saving(3, 2), 1);
  EXPECT_THROW(tail_saturation_check(1), DomainError);
}

TEST(GapTable, Rows) {
  auto rows = gap_table(3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].gap, 0);
  EXPECT_EQ(rows[1].gap, BigRational(1, 8));
  EXPECT_EQ(rows[2].gap, BigRational(1, 16));
  for (const auto& r : rows) {
    EXPECT_EQ(r.expected_length, r.entropy - r.saving_prob);
    EXPECT_EQ(r.entropy, make_rational(3 * r.n + 1, 2));
    EXPECT_EQ(r.gap, r.saving_prob - BigRational(1, 2));
    EXPECT_NEAR(r.gap_times_sqrt_n, r.gap.get_d() * std::sqrt(static_cast<double>(r.n)), 1e-15);
  }
  EXPECT_THROW(gap_table(0), DomainError);
}

TEST(MonteCarlo, DeterministicAndIndependentOfWorkers) {
  auto a = monte_carlo_length(5, 10000, 77);
  auto b = monte_carlo_length(5, 10000, 77, 3);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  auto c = monte_carlo_length(5, 10000, 78);
  EXPECT_NE(a.mean, c.mean);
}

TEST(MonteCarlo, WithinFiveStandardErrors) {
  struct Case {
    long n;
    std::uint64_t samples;
  };
  for (auto [n, samples] : {Case{1, 100000}, Case{2, 100000}, Case{100, 10000}}) {
    auto est = monte_carlo_length(n, samples, 2718);
    double exact = expected_length(n).get_d();
    EXPECT_GT(est.std_error, 0);
    EXPECT_LE(std::abs(est.mean - exact), 5 * est.std_error) << n;
  }
}

}  // namespace
}  // namespace shortlex
