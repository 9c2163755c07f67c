#include "menon/sums.hpp"

#include <numeric>

#include "menon/arith.hpp"
#include "menon/factor.hpp"

namespace menon {

void MenonParams::validate() const {
  if (m == 0) throw DomainError("Menon parameters: m must be positive");
  if (k == 0) throw DomainError("Menon parameters: k must be positive");
  checked_pow(m, k);
}

Natural MenonParams::modulus_power() const {
  validate();
  return checked_pow(m, k);
}

Natural menon_sum_bruteforce(const MenonParams& params, IterationCap cap) {
  const Natural mk = params.modulus_power();
  require_within_cap(mk, cap, "menon_sum_bruteforce");
  Natural sum = 0;
  for (Natural a = 1; a <= mk; ++a) {
    if (gcd_pow_k_magnitude(a, mk, params.k) != 1) continue;
    sum = checked_add(
        sum, gcd_pow_k_magnitude(abs_diff(a, params.s), mk, params.k));
  }
  return sum;
}

Natural menon_sum_over(std::span<const Integer> representatives,
                       const MenonParams& params) {
  const Natural mk = params.modulus_power();
  Natural sum = 0;
  for (Integer a : representatives) {
    sum = checked_add(sum, gcd_pow_k(checked_sub(a, params.s), mk, params.k));
  }
  return sum;
}

Natural menon_closed_form(const MenonParams& params) {
  params.validate();
  const Factorization f = factorize(params.m);
  return checked_mul(eval_multiplicative(d_s_k_rule(params.s, params.k), f),
                     eval_multiplicative(cohen_phi_rule(params.k), f));
}

IdentityReport verify_identity(const MenonParams& params, IterationCap cap) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.params = params;
  report.lhs = menon_sum_bruteforce(params, cap);
  report.rhs = menon_closed_form(params);
  report.holds = report.lhs == report.rhs;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

bool verify_rao_precondition(const MenonParams& params) {
  return gcd_pow_k(params.s, params.modulus_power(), params.k) == 1;
}

bool verify_unit_translation(const MenonParams& params, Integer l,
                             IterationCap cap) {
  const Natural mk = params.modulus_power();
  if (std::gcd(magnitude(l), params.m) != 1) {
    throw DomainError("verify_unit_translation: l = " + to_string(l) +
                      " is not coprime to m = " + to_string(params.m));
  }
  require_within_cap(mk, cap, "verify_unit_translation");
  Natural translated = 0;
  Natural plain = 0;
  for (Natural a = 1; a <= mk; ++a) {
    if (gcd_pow_k_magnitude(a, mk, params.k) != 1) continue;
    const auto signed_a = static_cast<Integer>(a);
    translated = checked_add(
        translated,
        gcd_pow_k(checked_sub(checked_mul(signed_a, l), params.s), mk,
                  params.k));
    plain = checked_add(plain, gcd_pow_k_magnitude(abs_diff(a, params.s), mk,
                                                   params.k));
  }
  return translated == plain;
}

bool verify_menon_multiplicativity(Natural m1, Natural m2, Integer s,
                                   unsigned k, IterationCap cap) {
  if (m1 == 0 || m2 == 0) {
    throw DomainError("verify_menon_multiplicativity: moduli must be positive");
  }
  if (std::gcd(m1, m2) != 1) {
    throw DomainError("verify_menon_multiplicativity: " + to_string(m1) +
                      " and " + to_string(m2) + " are not coprime");
  }
  const MenonParams joint{checked_mul(m1, m2), s, k};
  const Natural whole = menon_sum_bruteforce(joint, cap);
  const Natural left = menon_sum_bruteforce({m1, s, k}, cap);
  const Natural right = menon_sum_bruteforce({m2, s, k}, cap);
  Natural product;
  if (__builtin_mul_overflow(left, right, &product)) return false;
  return whole == product;
}

bool verify_prime_power(Natural p, unsigned v, Integer s, unsigned k,
                        IterationCap cap) {
  if (!is_prime(p)) {
    throw DomainError("verify_prime_power: " + to_string(p) + " is not prime");
  }
  if (v == 0) throw DomainError("verify_prime_power: v must be positive");
  const MenonParams params{checked_pow(p, v), s, k};
  const Natural lhs = menon_sum_bruteforce(params, cap);
  const Natural local_d = d_s_k_rule(s, k).local(p, v);
  const Natural local_phi = cohen_phi_rule(k).local(p, v);
  return lhs == checked_mul(local_d, local_phi);
}

Natural VerificationGrid::point_count() const {
  if (m_lo == 0) throw DomainError("verification grid: m must start at 1");
  if (m_lo > m_hi || s_lo > s_hi || ks.empty()) {
    throw DomainError("verification grid is empty");
  }
  const Natural m_count = checked_add(m_hi - m_lo, 1);
  const Natural s_count = checked_add(
      static_cast<Natural>(s_hi) - static_cast<Natural>(s_lo), 1);
  return checked_mul(checked_mul(m_count, s_count), Natural{ks.size()});
}

GridSummary verify_grid(const VerificationGrid& grid, IterationCap cap,
                        const ReportSink& sink) {
  grid.point_count();
  for (unsigned k : grid.ks) {
    if (k == 0) throw DomainError("verification grid: k must be positive");
  }
  const Natural s_span =
      static_cast<Natural>(grid.s_hi) - static_cast<Natural>(grid.s_lo);

  GridSummary summary;
  for (unsigned k : grid.ks) {
    for (Natural m = grid.m_lo;; ++m) {
      Natural mk;
      if (!pow_fits(m, k, mk) || mk > cap.max_iterations) {
        summary.skipped += static_cast<std::uint64_t>(s_span) + 1;
      } else {
        for (Natural i = 0;; ++i) {
          const auto s =
              static_cast<Integer>(static_cast<Natural>(grid.s_lo) + i);
          IdentityReport report = verify_identity({m, s, k}, cap);
          ++summary.checked;
          if (report.holds) {
            ++summary.passed;
          } else {
            summary.failures.push_back(report);
          }
          if (sink) sink(report);
          if (i == s_span) break;
        }
      }
      if (m == grid.m_hi) break;
    }
  }
  return summary;
}

}  // namespace menon
