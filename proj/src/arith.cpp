#include "menon/arith.hpp"

#include <numeric>

namespace menon {

namespace {

void require_positive(Natural m, const char* what) {
  if (m == 0) throw DomainError(std::string(what) + ": m must be positive");
}

void require_k(unsigned k, const char* what) {
  if (k == 0) throw DomainError(std::string(what) + ": k must be positive");
}

// m^k with the domain checks shared by every k-parameterized function.
Natural modulus_power(Natural m, unsigned k, const char* what) {
  require_positive(m, what);
  require_k(k, what);
  return checked_pow(m, k);
}

}  // namespace

Natural gcd(Integer a, Integer b) {
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  return std::gcd(magnitude(a), magnitude(b));
}

Natural gcd_pow_k_magnitude(Natural abs_a, Natural b, unsigned k) {
  require_k(k, "gcd_pow_k");
  if (b == 0) throw DomainError("gcd_pow_k: b must be positive");
  const Natural g = std::gcd(abs_a, b);
  if (k == 1 || g == 1) return g;
  Natural result = 1;
  for (const auto& [p, e] : factorize(g)) {
    const unsigned whole = e / k;
    if (whole > 0) result *= checked_pow(p, whole * k);
  }
  return result;
}

Natural gcd_pow_k(Integer a, Natural b, unsigned k) {
  return gcd_pow_k_magnitude(magnitude(a), b, k);
}

std::vector<PrimeLocalValue> local_values(const MultiplicativeFunction& f,
                                          const Factorization& m) {
  std::vector<PrimeLocalValue> out;
  out.reserve(m.size());
  for (const auto& [p, v] : m) out.push_back({p, v, f.local(p, v)});
  return out;
}

Natural eval_multiplicative(const MultiplicativeFunction& f,
                            const Factorization& m) {
  Natural result = 1;
  for (const auto& [p, v] : m) result = checked_mul(result, f.local(p, v));
  return result;
}

Natural eval_multiplicative(const MultiplicativeFunction& f, Natural m) {
  return eval_multiplicative(f, factorize(m));
}

bool prime_power_divides(Natural p, unsigned k, Integer s) {
  if (s == 0) return true;
  Natural pk;
  if (!pow_fits(p, k, pk)) return false;  // p^k > |s|
  return magnitude(s) % pk == 0;
}

MultiplicativeFunction divisor_count_rule() {
  return {"d", [](Natural, unsigned v) { return Natural{v} + 1; }};
}

MultiplicativeFunction euler_phi_rule() {
  return {"phi", [](Natural p, unsigned v) {
            const Natural lower = checked_pow(p, v - 1);
            return lower * (p - 1);
          }};
}

MultiplicativeFunction cohen_phi_rule(unsigned k) {
  require_k(k, "cohen_phi_rule");
  return {"cohen-phi", [k](Natural p, unsigned v) {
            const Natural upper = checked_pow(p, v * k);
            return upper - checked_pow(p, (v - 1) * k);
          }};
}

MultiplicativeFunction d_s_rule(Integer s) {
  return {"d-s", [s](Natural p, unsigned v) {
            return prime_power_divides(p, 1, s) ? Natural{1} : Natural{v} + 1;
          }};
}

MultiplicativeFunction d_s_k_rule(Integer s, unsigned k) {
  require_k(k, "d_s_k_rule");
  return {"d-s-k", [s, k](Natural p, unsigned v) {
            return prime_power_divides(p, k, s) ? Natural{1} : Natural{v} + 1;
          }};
}

MultiplicativeFunction pillai_rule(unsigned k) {
  require_k(k, "pillai_rule");
  return {"pillai",
          [k](Natural p, unsigned v) { return pillai_prime_power(p, v, k); }};
}

Natural pillai_prime_power(Natural p, unsigned v, unsigned k) {
  require_k(k, "pillai_prime_power");
  if (v == 0) return 1;
  const Natural top = checked_mul(Natural{v} + 1, checked_pow(p, v * k));
  const Natural lower = checked_mul(Natural{v}, checked_pow(p, (v - 1) * k));
  return top - lower;
}

Natural euler_phi(Natural m) {
  require_positive(m, "euler_phi");
  return eval_multiplicative(euler_phi_rule(), m);
}

Natural cohen_phi(Natural m, unsigned k) {
  modulus_power(m, k, "cohen_phi");
  return eval_multiplicative(cohen_phi_rule(k), m);
}

Natural cohen_phi_bruteforce(Natural m, unsigned k, IterationCap cap) {
  const Natural mk = modulus_power(m, k, "cohen_phi_bruteforce");
  require_within_cap(mk, cap, "cohen_phi_bruteforce");
  Natural count = 0;
  for (Natural a = 1; a <= mk; ++a) {
    if (gcd_pow_k_magnitude(a, mk, k) == 1) ++count;
  }
  return count;
}

Natural divisor_count(Natural m) {
  require_positive(m, "divisor_count");
  return factorize(m).divisor_count();
}

Natural d_s(Natural m, Integer s) {
  require_positive(m, "d_s");
  return eval_multiplicative(d_s_rule(s), m);
}

Natural d_s_k(Natural m, Integer s, unsigned k) {
  require_positive(m, "d_s_k");
  require_k(k, "d_s_k");
  return eval_multiplicative(d_s_k_rule(s, k), m);
}

Natural pillai(Natural m, unsigned k) {
  modulus_power(m, k, "pillai");
  Natural sum = 0;
  for (Natural d : divisors(m)) {
    sum = checked_add(sum, checked_mul(checked_pow(d, k), cohen_phi(m / d, k)));
  }
  return sum;
}

Natural pillai_bruteforce(Natural m, unsigned k, IterationCap cap) {
  const Natural mk = modulus_power(m, k, "pillai_bruteforce");
  require_within_cap(mk, cap, "pillai_bruteforce");
  Natural sum = 0;
  for (Natural a = 1; a <= mk; ++a) {
    sum = checked_add(sum, gcd_pow_k_magnitude(a, mk, k));
  }
  return sum;
}

}  // namespace menon
