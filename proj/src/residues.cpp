#include "menon/residues.hpp"

#include <algorithm>
#include <numeric>

#include "menon/arith.hpp"

namespace menon {

namespace {

// a mod n in [1, n]; a representative congruent to 0 maps to n.
Natural canonical(Natural a, Natural n) {
  const Natural r = a % n;
  return r == 0 ? n : r;
}

Natural canonical(Integer a, Natural n) {
  const Natural r = magnitude(a) % n;
  if (a >= 0 || r == 0) return r == 0 ? n : r;
  return n - r;
}

// (a * b) mod n without overflow, by doubling. Only used where a * b may
// exceed 128 bits.
Natural mul_mod(Natural a, Natural b, Natural n) {
  Natural product;
  if (!__builtin_mul_overflow(a, b, &product)) return product % n;
  a %= n;
  b %= n;
  Natural result = 0;
  while (b > 0) {
    if (b & 1U) {
      Natural t;
      if (__builtin_add_overflow(result, a, &t) || t >= n) t -= n;
      result = t;
    }
    Natural t;
    if (__builtin_add_overflow(a, a, &t) || t >= n) t -= n;
    a = t;
    b >>= 1;
  }
  return result;
}

Natural add_mod(Natural a, Natural b, Natural n) {
  Natural t;
  if (__builtin_add_overflow(a, b, &t) || t >= n) t -= n;
  return t;
}

}  // namespace

bool is_kth_power_coprime(Integer a, Natural m, unsigned k) {
  if (m == 0) throw DomainError("is_kth_power_coprime: m must be positive");
  return gcd_pow_k(a, checked_pow(m, k), k) == 1;
}

ResidueSet standard_residue_set(Natural m, unsigned k, IterationCap cap) {
  if (m == 0 || k == 0) {
    throw DomainError("standard_residue_set: m and k must be positive");
  }
  const Natural period = checked_pow(m, k);
  require_within_cap(period, cap, "standard_residue_set");
  std::vector<Natural> elems;
  for (Natural a = 1; a <= period; ++a) {
    if (gcd_pow_k_magnitude(a, period, k) == 1) elems.push_back(a);
  }
  return ResidueSet(m, k, period, std::move(elems));
}

ResidueSet crt_combine(const ResidueSet& first, const ResidueSet& second) {
  if (first.power() != second.power()) {
    throw DomainError("crt_combine: residue sets use different powers k");
  }
  if (std::gcd(first.modulus(), second.modulus()) != 1) {
    throw DomainError("crt_combine: moduli " + to_string(first.modulus()) +
                      " and " + to_string(second.modulus()) +
                      " are not coprime");
  }
  const unsigned k = first.power();
  const Natural m = checked_mul(first.modulus(), second.modulus());
  const Natural period = checked_pow(m, k);
  std::vector<Natural> elems;
  elems.reserve(first.size() * second.size());
  for (Natural a1 : first.elements()) {
    const Natural left = mul_mod(a1, second.period(), period);
    for (Natural a2 : second.elements()) {
      const Natural right = mul_mod(a2, first.period(), period);
      elems.push_back(canonical(add_mod(left, right, period), period));
    }
  }
  std::sort(elems.begin(), elems.end());
  return ResidueSet(m, k, period, std::move(elems));
}

ResidueSet ResidueSet::from_representatives(Natural m, unsigned k,
                                            std::span<const Integer> reps) {
  if (m == 0 || k == 0) {
    throw DomainError("from_representatives: m and k must be positive");
  }
  const Natural period = checked_pow(m, k);
  std::vector<Natural> elems;
  elems.reserve(reps.size());
  for (Integer a : reps) elems.push_back(canonical(a, period));
  std::sort(elems.begin(), elems.end());
  ResidueSet set(m, k, period, std::move(elems));
  if (auto why = find_invariant_violation(set)) throw DomainError(*why);
  return set;
}

std::optional<std::string> find_invariant_violation(const ResidueSet& set) {
  const Natural expected = cohen_phi(set.modulus(), set.power());
  if (set.size() != expected) {
    return "residue set has " + std::to_string(set.size()) +
           " elements, expected " + to_string(expected);
  }
  const auto& elems = set.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Natural a = elems[i];
    if (a < 1 || a > set.period()) {
      return "element " + to_string(a) + " outside [1, m^k]";
    }
    if (gcd_pow_k_magnitude(a, set.period(), set.power()) != 1) {
      return "element " + to_string(a) + " is not k-th power coprime to m^k";
    }
    if (i > 0 && elems[i - 1] >= a) {
      return "elements repeat a class or are out of order at " + to_string(a);
    }
  }
  return std::nullopt;
}

}  // namespace menon
