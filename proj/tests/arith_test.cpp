#include "menon/arith.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace menon {
namespace {

TEST(GcdTest, Examples) {
  EXPECT_EQ(gcd(0, 12), 12);
  EXPECT_EQ(gcd(-1, 12), 1);
  EXPECT_EQ(gcd(4, 12), 4);
  EXPECT_EQ(gcd(-4, -12), 4);
  EXPECT_THROW(gcd(0, 0), DomainError);
}

TEST(GcdPowKTest, Examples) {
  EXPECT_EQ(gcd_pow_k(4, 8, 3), 1);
  EXPECT_EQ(gcd_pow_k(8, 27, 3), 1);
  EXPECT_EQ(gcd_pow_k(12, 16, 2), 4);
  EXPECT_EQ(gcd_pow_k(0, 16, 2), 16);
  EXPECT_EQ(gcd_pow_k(-12, 16, 2), 4);
  EXPECT_THROW(gcd_pow_k(4, 8, 0), DomainError);
  EXPECT_THROW(gcd_pow_k(4, 0, 2), DomainError);
}

TEST(GcdPowKTest, MatchesSearchOracle) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (std::uint64_t b = 1; b <= 300; ++b) {
      for (std::int64_t a = -40; a <= 300; ++a) {
        ASSERT_EQ(gcd_pow_k(a, b, k), oracle::search_gcd_pow_k(a, b, k))
            << "a=" << a << " b=" << b << " k=" << k;
      }
    }
  }
}

TEST(GcdPowKTest, KEqualsOneIsOrdinaryGcd) {
  for (Integer a = -50; a <= 50; ++a) {
    if (a == 0) continue;
    for (Natural b = 1; b <= 50; ++b) ASSERT_EQ(gcd_pow_k(a, b, 1), gcd(a, b));
  }
}

TEST(GcdPowKTest, MultiplicativeInTheModulus) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> small(1, 40);
  std::uniform_int_distribution<long long> any_a(-100000, 100000);
  int checked = 0;
  while (checked < 500) {
    const Natural m1 = small(rng);
    const Natural m2 = small(rng);
    if (gcd(m1, m2) != 1) continue;
    const unsigned k = 1 + checked % 3;
    const Integer a = any_a(rng);
    ASSERT_EQ(gcd_pow_k(a, checked_pow(m1 * m2, k), k),
              gcd_pow_k(a, checked_pow(m1, k), k) *
                  gcd_pow_k(a, checked_pow(m2, k), k));
    ++checked;
  }
}

TEST(GcdPowKTest, InvariantUnderShiftsByTheModulus) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> small(1, 30);
  std::uniform_int_distribution<long long> any(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    const unsigned k = 1 + i % 3;
    const Natural mk = checked_pow(small(rng), k);
    const Integer a = any(rng);
    const Integer q = any(rng) % 1000;
    ASSERT_EQ(gcd_pow_k(a + q * static_cast<Integer>(mk), mk, k),
              gcd_pow_k(a, mk, k));
  }
}

TEST(GcdPowKTest, HandlesValuesBeyondSixtyFourBits) {
  const Natural p = parse_natural("4398046511119");  // prime, p^3 > 2^126
  const Natural p3 = checked_pow(p, 3);
  EXPECT_EQ(gcd_pow_k(0, p3, 3), p3);
  EXPECT_EQ(gcd_pow_k(0, p3, 2), p * p);
  EXPECT_EQ(gcd_pow_k(static_cast<Integer>(p * p), p3, 2), p * p);
  EXPECT_EQ(gcd_pow_k(static_cast<Integer>(p * p), p3, 3), 1);
}

TEST(EulerPhiTest, Examples) {
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(1), 1);
  for (Natural p : {2, 3, 97, 65537}) EXPECT_EQ(euler_phi(p), p - 1);
  EXPECT_THROW(euler_phi(0), DomainError);
  // sympy.totient(2^128 - 1)
  EXPECT_EQ(euler_phi(kNaturalMax),
            parse_natural("169875107699410294159549716941399654400"));
}

TEST(CohenPhiTest, Examples) {
  EXPECT_EQ(cohen_phi(4, 2), 12);
  for (unsigned j = 1; j <= 30; ++j) {
    EXPECT_EQ(cohen_phi(checked_pow(2, j), 2), 3 * checked_pow(4, j - 1));
  }
  for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(cohen_phi(1, k), 1);
  EXPECT_THROW(cohen_phi(1000, 14), OverflowError);
  EXPECT_THROW(cohen_phi(4, 0), DomainError);
}

TEST(CohenPhiTest, KEqualsOneIsEulerPhi) {
  for (Natural m = 1; m <= 1000; ++m) ASSERT_EQ(cohen_phi(m, 1), euler_phi(m));
}

TEST(CohenPhiTest, BruteForceExamplesAndCap) {
  EXPECT_EQ(cohen_phi_bruteforce(4, 2), 12);
  EXPECT_EQ(cohen_phi_bruteforce(1, 3), 1);
  EXPECT_EQ(cohen_phi_bruteforce(12, 1), 4);
  EXPECT_THROW(cohen_phi_bruteforce(100, 4), ResourceError);
  EXPECT_THROW(cohen_phi_bruteforce(20, 2, IterationCap{399}), ResourceError);
  EXPECT_EQ(cohen_phi_bruteforce(20, 2, IterationCap{400}), cohen_phi(20, 2));
}

TEST(CohenPhiTest, ClosedFormMatchesCount) {
  for (unsigned k = 1; k <= 3; ++k) {
    const Natural top = k == 3 ? 20 : 60;
    for (Natural m = 1; m <= top; ++m) {
      ASSERT_EQ(cohen_phi(m, k), cohen_phi_bruteforce(m, k)) << "k=" << k;
    }
  }
}

TEST(CohenPhiTest, MultiplicativeOnCoprimePairs) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (Natural a = 1; a <= 60; ++a) {
      for (Natural b = 1; b <= 60; ++b) {
        if (gcd(a, b) != 1) continue;
        ASSERT_EQ(cohen_phi(a * b, k), cohen_phi(a, k) * cohen_phi(b, k));
      }
    }
  }
}

TEST(DivisorCountTest, Examples) {
  EXPECT_EQ(divisor_count(12), 6);
  EXPECT_EQ(divisor_count(4), 3);
  EXPECT_EQ(divisor_count(1), 1);
  EXPECT_EQ(divisor_count(kNaturalMax), 512);
}

TEST(DsTest, Examples) {
  EXPECT_EQ(d_s(12, 1), 6);
  EXPECT_EQ(d_s(12, 2), 2);
  EXPECT_EQ(d_s(12, 3), 3);
  for (Natural m = 1; m <= 50; ++m) EXPECT_EQ(d_s(m, 0), 1);
}

TEST(DsTest, MatchesEnumerationAndSymmetry) {
  for (std::uint64_t m = 1; m <= 200; ++m) {
    for (std::int64_t s = -30; s <= 30; ++s) {
      ASSERT_EQ(d_s(m, s), oracle::count_divisors_coprime_to(m, s))
          << "m=" << m << " s=" << s;
      ASSERT_EQ(d_s(m, s), d_s(m, -s));
      if (s != 0 && gcd(s, static_cast<Integer>(m)) == 1) {
        ASSERT_EQ(d_s(m, s), divisor_count(m));
      }
    }
  }
}

TEST(DskTest, Examples) {
  EXPECT_EQ(d_s_k(4, 12, 2), 1);
  EXPECT_EQ(d_s_k(4, 1, 2), 3);
  EXPECT_EQ(d_s_k(12, 2, 1), 2);
  EXPECT_EQ(d_s_k(360, 0, 3), 1);
  EXPECT_THROW(d_s_k(4, 1, 0), DomainError);
}

TEST(DskTest, KEqualsOneIsDs) {
  for (Natural m = 1; m <= 300; ++m) {
    for (Integer s = -25; s <= 25; ++s) ASSERT_EQ(d_s_k(m, s, 1), d_s(m, s));
  }
}

TEST(DskTest, LargePrimesNeverDivideSmallShifts) {
  // p^k overflows 128 bits, so it cannot divide any non-zero s.
  const Natural p = (Natural{1} << 89) - 1;
  EXPECT_EQ(d_s_k(p, 12, 2), 2);
  EXPECT_EQ(d_s_k(p, 0, 2), 1);
  EXPECT_FALSE(prime_power_divides(p, 2, static_cast<Integer>(p)));
  EXPECT_TRUE(prime_power_divides(p, 1, static_cast<Integer>(p)));
}

TEST(PillaiTest, Examples) {
  EXPECT_EQ(pillai(4, 2), 40);
  for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(pillai(1, k), 1);
  for (Natural p : {2, 3, 5, 7, 101}) EXPECT_EQ(pillai(p, 1), 2 * p - 1);
  EXPECT_EQ(pillai(12, 1), 40);
}

TEST(PillaiTest, BruteForceExamples) {
  EXPECT_EQ(pillai_bruteforce(4, 2), 40);
  EXPECT_EQ(pillai_bruteforce(1, 1), 1);
  // Divisor sum 1*4 + 2*2 + 3*2 + 4*2 + 6*1 + 12*1, and the direct gcd sum.
  EXPECT_EQ(pillai_bruteforce(12, 1), 40);
  EXPECT_EQ(pillai_bruteforce(7, 1), 13);
}

TEST(PillaiTest, DivisorSumMatchesDirectSumAndPrimePowers) {
  for (unsigned k = 1; k <= 3; ++k) {
    const Natural top = k == 3 ? 20 : 60;
    for (Natural m = 1; m <= top; ++m) {
      ASSERT_EQ(pillai(m, k), pillai_bruteforce(m, k));
      ASSERT_EQ(pillai(m, k), eval_multiplicative(pillai_rule(k), m));
    }
  }
  EXPECT_EQ(pillai_prime_power(2, 2, 2), 40);
  EXPECT_EQ(pillai_prime_power(3, 2, 2), 225);
  EXPECT_EQ(pillai_prime_power(3, 1, 2), 17);
}

TEST(EvalMultiplicativeTest, Examples) {
  EXPECT_EQ(eval_multiplicative(d_s_k_rule(12, 2), 4), 1);
  for (const auto& rule : {divisor_count_rule(), euler_phi_rule(),
                           cohen_phi_rule(3), d_s_rule(5), pillai_rule(2)}) {
    EXPECT_EQ(eval_multiplicative(rule, 1), 1) << rule.name;
  }
  EXPECT_EQ(eval_multiplicative(cohen_phi_rule(1), 12), 4);
}

TEST(EvalMultiplicativeTest, LocalValues) {
  const auto values = local_values(cohen_phi_rule(2), factorize(12));
  ASSERT_EQ(values.size(), 2U);
  EXPECT_EQ(values[0].prime, 2);
  EXPECT_EQ(values[0].exponent, 2U);
  EXPECT_EQ(values[0].value, 12);  // 2^4 - 2^2
  EXPECT_EQ(values[1].value, 8);   // 3^2 - 1
}

TEST(EvalMultiplicativeTest, RulesAreMultiplicativeOnSampledCoprimePairs) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(1, 5000);
  const std::vector<MultiplicativeFunction> rules = {
      divisor_count_rule(), euler_phi_rule(), cohen_phi_rule(2),
      d_s_rule(-18), d_s_k_rule(72, 2), pillai_rule(1)};
  int checked = 0;
  while (checked < 400) {
    const Natural a = dist(rng);
    const Natural b = dist(rng);
    if (gcd(a, b) != 1) continue;
    for (const auto& rule : rules) {
      ASSERT_EQ(eval_multiplicative(rule, a * b),
                eval_multiplicative(rule, a) * eval_multiplicative(rule, b))
          << rule.name;
    }
    ++checked;
  }
}

TEST(EvalMultiplicativeTest, PropagatesOverflow) {
  EXPECT_THROW(eval_multiplicative(pillai_rule(2), kNaturalMax), OverflowError);
}

}  // namespace
}  // namespace menon
