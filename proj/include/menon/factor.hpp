#pragma once

#include <cstddef>
#include <vector>

#include "menon/int128.hpp"

namespace menon {

struct PrimePower {
  Natural prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod p^v over (p, v) pairs, primes strictly ascending, every v >= 1.
// The factorization of 1 is empty.
class Factorization {
 public:
  Factorization() = default;

  // Validates ordering, exponents and primality of every base.
  explicit Factorization(std::vector<PrimePower> pairs);

  // Skips validation. For producers that already certify their primes
  // (the smallest-prime-factor sieve).
  static Factorization trusted(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  // prod p^v; throws OverflowError if it does not fit.
  Natural value() const;

  // prod (v + 1).
  Natural divisor_count() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

// Deterministic for every 128-bit n. See factor.cpp for the method.
bool is_prime(Natural n);

// Throws DomainError for n = 0.
Factorization factorize(Natural n);

// All positive divisors in ascending order. Throws DomainError for n = 0.
std::vector<Natural> divisors(Natural n);
std::vector<Natural> divisors(const Factorization& f);

// Largest r with r*r <= n.
Natural isqrt(Natural n);

}  // namespace menon
