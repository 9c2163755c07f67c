#pragma once

#include <functional>
#include <string>
#include <vector>

#include "menon/cap.hpp"
#include "menon/factor.hpp"
#include "menon/int128.hpp"

namespace menon {

// ---------------------------------------------------------------------------
// gcd and the k-th power gcd
// ---------------------------------------------------------------------------

// Ordinary gcd on |a|, |b|; gcd(0, b) = |b|. Throws DomainError when both
// arguments are zero.
Natural gcd(Integer a, Integer b);

// (a, b)_k: the largest t^k dividing both a and b. Sign-invariant in a; for
// a = 0 it is the largest k-th power dividing b. Requires b >= 1, k >= 1.
Natural gcd_pow_k(Integer a, Natural b, unsigned k);

// gcd_pow_k on an already-taken magnitude |a|, for callers whose signed
// value would not fit in Integer.
Natural gcd_pow_k_magnitude(Natural abs_a, Natural b, unsigned k);

// ---------------------------------------------------------------------------
// Multiplicative functions as prime-power rules
// ---------------------------------------------------------------------------

// f(p^v) for one prime power of the argument.
struct PrimeLocalValue {
  Natural prime;
  unsigned exponent;
  Natural value;
};

// A multiplicative function given by its prime-power values. Context such as
// s or k is captured by the rule. Rules must be free of side effects.
struct MultiplicativeFunction {
  std::string name;
  std::function<Natural(Natural prime, unsigned exponent)> local;
};

std::vector<PrimeLocalValue> local_values(const MultiplicativeFunction& f,
                                          const Factorization& m);

// prod f(p^v) over p^v || m; 1 for m = 1. Propagates OverflowError.
Natural eval_multiplicative(const MultiplicativeFunction& f,
                            const Factorization& m);
Natural eval_multiplicative(const MultiplicativeFunction& f, Natural m);

MultiplicativeFunction divisor_count_rule();
MultiplicativeFunction euler_phi_rule();
MultiplicativeFunction cohen_phi_rule(unsigned k);
MultiplicativeFunction d_s_rule(Integer s);
MultiplicativeFunction d_s_k_rule(Integer s, unsigned k);
MultiplicativeFunction pillai_rule(unsigned k);

// True iff p^k divides s. Every p^k divides 0.
bool prime_power_divides(Natural p, unsigned k, Integer s);

// ---------------------------------------------------------------------------
// Named functions. All take m >= 1 (DomainError otherwise) and k >= 1.
// ---------------------------------------------------------------------------

Natural euler_phi(Natural m);

// Eckford Cohen totient: m^k prod_{p | m} (1 - p^-k). OverflowError if m^k
// does not fit.
Natural cohen_phi(Natural m, unsigned k);

// Counts a in [1, m^k] with (a, m^k)_k = 1 directly.
Natural cohen_phi_bruteforce(Natural m, unsigned k, IterationCap cap = {});

Natural divisor_count(Natural m);

// Number of divisors of m coprime to s.
Natural d_s(Natural m, Integer s);

// prod over p^v || m of (1 if p^k | s else v + 1).
Natural d_s_k(Natural m, Integer s, unsigned k);

// Sum over d | m of d^k * cohen_phi(m / d, k).
Natural pillai(Natural m, unsigned k);

// Sum over a in [1, m^k] of (a, m^k)_k directly.
Natural pillai_bruteforce(Natural m, unsigned k, IterationCap cap = {});

// (v + 1) p^{vk} - v p^{(v-1)k}.
Natural pillai_prime_power(Natural p, unsigned v, unsigned k);

}  // namespace menon
