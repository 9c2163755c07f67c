#include "menon/factor.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace menon {
namespace {

Natural from_decimal(const char* text) { return parse_natural(text); }

TEST(IsPrimeTest, SmallExamples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(12));
  EXPECT_FALSE(is_prime(0));
}

TEST(IsPrimeTest, AgreesWithTrialDivisionBelowTwoHundredThousand) {
  for (std::uint64_t n = 0; n < 200000; ++n) {
    ASSERT_EQ(is_prime(n), oracle::trial_division_is_prime(n)) << n;
  }
}

TEST(IsPrimeTest, AgreesWithTrialDivisionAroundTheTrialBound) {
  // 2^28 is the square of the trial-division bound; the Miller-Rabin path
  // takes over just above it.
  for (std::uint64_t n = (1U << 28) - 3000; n < (1U << 28) + 3000; ++n) {
    ASSERT_EQ(is_prime(n), oracle::trial_division_is_prime(n)) << n;
  }
}

TEST(IsPrimeTest, StrongPseudoprimesAreRejected) {
  // Strong pseudoprimes to several small bases, and the smallest number
  // fooling the first 13 prime bases.
  for (const char* n : {"3215031751", "341550071728321", "3825123056546413051",
                        "318665857834031151167461",
                        "3317044064679887385961981"}) {
    EXPECT_FALSE(is_prime(from_decimal(n))) << n;
  }
}

TEST(IsPrimeTest, LargePrimes) {
  EXPECT_TRUE(is_prime(from_decimal("18446744073709551557")));  // 2^64 - 59
  EXPECT_TRUE(is_prime((Natural{1} << 89) - 1));
  EXPECT_TRUE(is_prime((Natural{1} << 127) - 1));
  EXPECT_TRUE(is_prime(from_decimal("1267650600228229401496703205653")));
  EXPECT_FALSE(is_prime(((Natural{1} << 89) - 1) * 3));
  EXPECT_FALSE(is_prime(kNaturalMax));
}

TEST(FactorizeTest, Examples) {
  EXPECT_EQ(factorize(12).pairs(),
            (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(16).pairs(), (std::vector<PrimePower>{{2, 4}}));
  EXPECT_THROW(factorize(0), DomainError);
}

TEST(FactorizeTest, LargeInputs) {
  // Expected factorizations computed independently with sympy.factorint.
  EXPECT_EQ(factorize(kNaturalMax).pairs(),
            (std::vector<PrimePower>{{3, 1},
                                     {5, 1},
                                     {17, 1},
                                     {257, 1},
                                     {641, 1},
                                     {65537, 1},
                                     {274177, 1},
                                     {6700417, 1},
                                     {67280421310721, 1}}));
  EXPECT_EQ(factorize(from_decimal("10633823956375806666641571278131036159"))
                .pairs(),
            (std::vector<PrimePower>{{2147483647, 2}, {2305843009213693951, 1}}));
  EXPECT_EQ(factorize(from_decimal("2417851639291930512195989")).pairs(),
            (std::vector<PrimePower>{{1099511627791, 1}, {2199023255579, 1}}));
  EXPECT_EQ(factorize(from_decimal("85070591731105042455969153545125498159"))
                .pairs(),
            (std::vector<PrimePower>{{4398046511119, 3}}));
  EXPECT_EQ(factorize(from_decimal("3317044064679887385961981")).pairs(),
            (std::vector<PrimePower>{{1287836182261, 1}, {2575672364521, 1}}));
  const Natural mersenne127 = (Natural{1} << 127) - 1;
  EXPECT_EQ(factorize(mersenne127).pairs(),
            (std::vector<PrimePower>{{mersenne127, 1}}));
}

TEST(FactorizeTest, IsDeterministic) {
  const Natural n = from_decimal("2417851639291930512195989");
  EXPECT_EQ(factorize(n), factorize(n));
}

TEST(FactorizeTest, ReconstructsAndCountsDivisors) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    ASSERT_EQ(f.value(), n);
    Natural previous = 1;
    for (const auto& [p, v] : f) {
      ASSERT_GT(p, previous);
      ASSERT_GE(v, 1U);
      ASSERT_TRUE(oracle::trial_division_is_prime(static_cast<std::uint64_t>(p)));
      previous = p;
    }
    ASSERT_EQ(divisors(n).size(), f.divisor_count()) << n;
  }
}

TEST(FactorizationTest, ConstructorValidates) {
  EXPECT_NO_THROW(Factorization({{2, 1}, {3, 2}}));
  EXPECT_THROW(Factorization({{3, 1}, {2, 1}}), DomainError);
  EXPECT_THROW(Factorization({{2, 0}}), DomainError);
  EXPECT_THROW(Factorization({{4, 1}}), DomainError);
  EXPECT_THROW(Factorization({{2, 128}}).value(), OverflowError);
}

TEST(DivisorsTest, Examples) {
  EXPECT_EQ(divisors(12), (std::vector<Natural>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<Natural>{1}));
  EXPECT_EQ(divisors(97), (std::vector<Natural>{1, 97}));
  EXPECT_THROW(divisors(0), DomainError);
}

TEST(DivisorsTest, MatchesEnumeration) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto expected = oracle::enumerate_divisors(n);
    const auto got = divisors(n);
    ASSERT_EQ(got.size(), expected.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(got[i], expected[i]);
  }
}

TEST(IsqrtTest, FloorRoot) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(15), 3);
  EXPECT_EQ(isqrt(16), 4);
  EXPECT_EQ(isqrt(kNaturalMax), ~std::uint64_t{0});
  const Natural r = (Natural{1} << 63) + 12345;
  EXPECT_EQ(isqrt(r * r), r);
  EXPECT_EQ(isqrt(r * r - 1), r - 1);
}

}  // namespace
}  // namespace menon
