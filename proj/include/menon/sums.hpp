#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "menon/cap.hpp"
#include "menon/int128.hpp"

namespace menon {

// The (m, s, k) of a generalized Menon sum
//   M_s^(k)(m) = sum over a in a k-th power reduced residue set mod m
//                of (a - s, m^k)_k.
// s = 1, k = 1 is Menon's original identity.
struct MenonParams {
  Natural m = 1;
  Integer s = 0;
  unsigned k = 1;

  // Throws DomainError for m = 0 or k = 0, OverflowError if m^k does not fit.
  void validate() const;

  // m^k; validates first.
  Natural modulus_power() const;

  friend bool operator==(const MenonParams&, const MenonParams&) = default;
};

// Both sides of the identity M_s^(k)(m) = d_s^(k)(m) * phi^(k)(m) for one
// parameter triple.
struct IdentityReport {
  MenonParams params;
  Natural lhs = 0;  // summed over the standard residue set
  Natural rhs = 0;  // closed form from the factorization of m
  bool holds = false;
  std::chrono::nanoseconds elapsed{0};
};

// Direct summation over the standard residue set. ResourceError when
// m^k exceeds the cap.
Natural menon_sum_bruteforce(const MenonParams& params, IterationCap cap = {});

// Direct summation over arbitrary representatives of a reduced residue set.
// The caller is responsible for the representatives forming such a set.
Natural menon_sum_over(std::span<const Integer> representatives,
                       const MenonParams& params);

// d_s^(k)(m) * phi^(k)(m).
Natural menon_closed_form(const MenonParams& params);

// Computes both sides. Never asserts; a report with holds == false is a
// counterexample and therefore a bug somewhere in this library.
IdentityReport verify_identity(const MenonParams& params,
                               IterationCap cap = {});

// True iff (s, m^k)_k = 1, the hypothesis under which d_s^(k)(m) = d(m).
bool verify_rao_precondition(const MenonParams& params);

// sum (a l - s, m^k)_k == sum (a - s, m^k)_k over the standard residue set.
// DomainError unless gcd(l, m) = 1.
bool verify_unit_translation(const MenonParams& params, Integer l,
                             IterationCap cap = {});

// M(m1 m2) == M(m1) M(m2) by direct summation. DomainError unless
// gcd(m1, m2) = 1.
bool verify_menon_multiplicativity(Natural m1, Natural m2, Integer s,
                                   unsigned k, IterationCap cap = {});

// M(p^v) == d_s^(k)(p^v) phi^(k)(p^v) with the left side summed directly.
// DomainError unless p is prime.
bool verify_prime_power(Natural p, unsigned v, Integer s, unsigned k,
                        IterationCap cap = {});

// Inclusive parameter grid for bulk verification.
struct VerificationGrid {
  Natural m_lo = 1;
  Natural m_hi = 1;
  Integer s_lo = 0;
  Integer s_hi = 0;
  std::vector<unsigned> ks{1};

  // Number of (m, s, k) points; DomainError when the grid is empty.
  Natural point_count() const;
};

struct GridSummary {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;  // m^k above the cap or outside the domain
  std::vector<IdentityReport> failures;

  std::uint64_t failed() const { return checked - passed; }
};

using ReportSink = std::function<void(const IdentityReport&)>;

// Visits k in the given order, then m ascending, then s ascending. `sink`
// (optional) sees every checked report in that order.
GridSummary verify_grid(const VerificationGrid& grid, IterationCap cap = {},
                        const ReportSink& sink = {});

}  // namespace menon
