#pragma once

// Naive reference implementations used only by the test suites. None of
// these go through factorize(), the multiplicative rules, or any closed
// form, so they stay independent of the code paths they check.

#include <cstdint>
#include <numeric>
#include <vector>

namespace menon::oracle {

inline bool trial_division_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> enumerate_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Largest t^k dividing both |a| and b (b >= 1), by searching t upward.
inline std::uint64_t search_gcd_pow_k(std::int64_t a, std::uint64_t b,
                                      unsigned k) {
  const std::uint64_t abs_a =
      a < 0 ? static_cast<std::uint64_t>(-a) : static_cast<std::uint64_t>(a);
  std::uint64_t best = 1;
  for (std::uint64_t t = 2;; ++t) {
    const std::uint64_t tk = ipow(t, k);
    if (tk > b) break;
    if (b % tk == 0 && abs_a % tk == 0) best = tk;
  }
  return best;
}

// Number of divisors of m coprime to s, by enumeration.
inline std::uint64_t count_divisors_coprime_to(std::uint64_t m,
                                               std::int64_t s) {
  const std::uint64_t abs_s =
      s < 0 ? static_cast<std::uint64_t>(-s) : static_cast<std::uint64_t>(s);
  std::uint64_t count = 0;
  for (std::uint64_t d : enumerate_divisors(m)) {
    if (std::gcd(d, abs_s) == 1) ++count;
  }
  return count;
}

// sum over a in [1, m^k] with (a, m^k)_k = 1 of (a - s, m^k)_k, with every
// k-th power gcd found by search.
inline std::uint64_t menon_sum(std::uint64_t m, std::int64_t s, unsigned k) {
  const std::uint64_t mk = ipow(m, k);
  std::uint64_t sum = 0;
  for (std::uint64_t a = 1; a <= mk; ++a) {
    if (search_gcd_pow_k(static_cast<std::int64_t>(a), mk, k) != 1) continue;
    sum += search_gcd_pow_k(static_cast<std::int64_t>(a) - s, mk, k);
  }
  return sum;
}

}  // namespace menon::oracle
