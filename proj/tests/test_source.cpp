#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <string>

#include "shortlex/source.hpp"

namespace shortlex {
namespace {

TEST(Source, TransitionTable) {
  EXPECT_TRUE(transition_allowed(Symbol::A, Symbol::C));
  EXPECT_FALSE(transition_allowed(Symbol::A, Symbol::B));
  EXPECT_TRUE(transition_allowed(Symbol::C, Symbol::A));
  EXPECT_TRUE(transition_allowed(Symbol::A, Symbol::A));
  EXPECT_FALSE(transition_allowed(Symbol::A, Symbol::D));
  EXPECT_TRUE(transition_allowed(Symbol::B, Symbol::D));
  EXPECT_FALSE(transition_allowed(Symbol::B, Symbol::A));
  EXPECT_FALSE(transition_allowed(Symbol::B, Symbol::C));
  for (Symbol to : kSymbols) {
    EXPECT_TRUE(transition_allowed(Symbol::C, to));
    EXPECT_TRUE(transition_allowed(Symbol::D, to));
  }
}

TEST(Source, Admissibility) {
  EXPECT_TRUE(is_admissible("AC"));
  EXPECT_FALSE(is_admissible("AB"));
  EXPECT_FALSE(is_admissible(""));
  EXPECT_FALSE(is_admissible("AX"));
  EXPECT_TRUE(is_admissible("CDAC"));
  EXPECT_THROW(AdmissibleString("AB"), InadmissibleError);
  EXPECT_THROW(AdmissibleString(""), InadmissibleError);
  EXPECT_THROW(AdmissibleString("a"), InadmissibleError);
}

TEST(Source, DiagnosticNamesForbiddenTransition) {
  try {
    AdmissibleString("CAB");
    FAIL() << "expected InadmissibleError";
  } catch (const InadmissibleError& e) {
    EXPECT_NE(std::string(e.what()).find("A->B"), std::string::npos) << e.what();
  }
}

TEST(Source, CdCount) {
  EXPECT_EQ(cd_count(AdmissibleString("A")), 0u);
  EXPECT_EQ(cd_count(AdmissibleString("CA")), 1u);
  EXPECT_EQ(cd_count(AdmissibleString("CDAC")), 2u);
  EXPECT_EQ(cd_count(AdmissibleString("C")), 0u);
}

TEST(Source, InformationCost) {
  EXPECT_EQ(information_cost(AdmissibleString("A")), 2u);
  EXPECT_EQ(information_cost(AdmissibleString("AA")), 3u);
  EXPECT_EQ(information_cost(AdmissibleString("CA")), 4u);
  EXPECT_THROW(information_cost("AB"), InadmissibleError);
}

TEST(Source, BlockProbability) {
  EXPECT_EQ(block_probability("C"), BigRational(1, 4));
  EXPECT_EQ(block_probability("AA"), BigRational(1, 8));
  EXPECT_EQ(block_probability("DD"), BigRational(1, 16));
  EXPECT_THROW(block_probability("BA"), InadmissibleError);
}

TEST(Source, ProbabilityIsDyadicInCost) {
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const auto& u : enumerate_admissible(len)) {
      auto k = information_cost(u);
      EXPECT_EQ(block_probability(u), BigRational(1) / BigRational(pow2(k))) << u.str();
      EXPECT_LE(cd_count(u), len - 1);
      EXPECT_GE(k, len + 1);
      EXPECT_LE(k, 2 * len);
    }
  }
}

TEST(Source, EnumerationSizeAndNormalization) {
  for (std::size_t len = 1; len <= 10; ++len) {
    auto all = enumerate_admissible(len);
    BigInt expected = 4;
    for (std::size_t i = 1; i < len; ++i) expected *= 3;
    EXPECT_EQ(BigInt(static_cast<unsigned long>(all.size())), expected) << len;
    if (len <= 8) {
      BigRational total;
      for (const auto& u : all) total += block_probability(u);
      EXPECT_EQ(total, 1) << len;
    }
  }
}

TEST(Source, MarginalsAreUniform) {
  for (std::size_t i = 1; i <= 50; ++i) {
    auto m = marginal_distribution(i);
    for (Symbol s : kSymbols) EXPECT_EQ(m.at(s), BigRational(1, 4)) << "i=" << i;
  }
  EXPECT_THROW(marginal_distribution(0), DomainError);
}

TEST(Source, SamplingIsDeterministicAndAdmissible) {
  EXPECT_EQ(sample_block(5, 42), sample_block(5, 42));
  EXPECT_EQ(sample_block(1, 7).size(), 1u);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto u = sample_block(100, seed);
    EXPECT_EQ(u.size(), 100u);
    EXPECT_TRUE(is_admissible(u.str()));
  }
  EXPECT_THROW(sample_block(0, 1), DomainError);
}

TEST(Source, SampledFirstSymbolIsUniform) {
  const int trials = 40000;
  std::map<char, int> freq;
  for (int s = 0; s < trials; ++s) ++freq[sample_block(1, static_cast<std::uint64_t>(s)).str()[0]];
  // Binomial(40000, 1/4): sd ~ 86.6; allow 5 sd.
  for (char c : {'A', 'B', 'C', 'D'}) EXPECT_NEAR(freq[c], trials / 4, 433) << c;
}

TEST(Source, SampledCdCountHasMeanHalfPerPosition) {
  const std::size_t n = 41;
  const int trials = 5000;
  BlockSampler sampler(2024);
  long total = 0;
  for (int i = 0; i < trials; ++i) total += static_cast<long>(cd_count(sampler.next(n)));
  // Bin(40, 1/2) summed over 5000 draws: mean 100000, sd sqrt(5000*10) ~ 224.
  EXPECT_NEAR(static_cast<double>(total), 20.0 * trials, 5 * 224.0);
}

TEST(Source, SampledTransitionFrequenciesMatchLaw) {
  BlockSampler sampler(99);
  std::map<std::pair<char, char>, int> pairs;
  std::map<char, int> from;
  for (int i = 0; i < 2000; ++i) {
    auto s = sampler.next(50).str();
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
      ++pairs[{s[j], s[j + 1]}];
      ++from[s[j]];
    }
  }
  for (auto [key, count] : pairs) {
    double p = transition_probability(Symbol{key.first}, Symbol{key.second}).get_d();
    ASSERT_GT(p, 0.0);
    double expected = p * from[key.first];
    EXPECT_NEAR(count, expected, 5 * std::sqrt(expected * (1 - p)) + 1) << key.first << key.second;
  }
}

}  // namespace
}  // namespace shortlex
