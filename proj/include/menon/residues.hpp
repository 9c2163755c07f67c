#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "menon/cap.hpp"
#include "menon/int128.hpp"

namespace menon {

// A k-th power reduced set of residues modulo m: one representative from
// each class mod m^k that is k-th power coprime to m^k. Representatives
// are stored reduced into [1, m^k] and ascending, so two sets for the same
// (m, k) compare equal iff they cover the same classes.
class ResidueSet {
 public:
  // Reduces arbitrary representatives into canonical form. Throws
  // DomainError if they do not form a k-th power reduced set mod m.
  static ResidueSet from_representatives(Natural m, unsigned k,
                                         std::span<const Integer> reps);

  Natural modulus() const { return modulus_; }
  unsigned power() const { return power_; }
  Natural period() const { return period_; }  // m^k
  const std::vector<Natural>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  ResidueSet(Natural m, unsigned k, Natural period, std::vector<Natural> elems)
      : modulus_(m), power_(k), period_(period), elements_(std::move(elems)) {}

  friend ResidueSet standard_residue_set(Natural, unsigned, IterationCap);
  friend ResidueSet crt_combine(const ResidueSet&, const ResidueSet&);

  Natural modulus_;
  unsigned power_;
  Natural period_;
  std::vector<Natural> elements_;
};

// {a : 1 <= a <= m^k, (a, m^k)_k = 1}. ResourceError when m^k > cap.
ResidueSet standard_residue_set(Natural m, unsigned k, IterationCap cap = {});

// {a1 m2^k + a2 m1^k} reduced mod (m1 m2)^k. The moduli must be coprime
// and the powers equal (DomainError otherwise).
ResidueSet crt_combine(const ResidueSet& first, const ResidueSet& second);

// (a, m^k)_k == 1.
bool is_kth_power_coprime(Integer a, Natural m, unsigned k);

// Checks cardinality, coprimality, range and distinctness. Returns a
// description of the first violated invariant, or nullopt.
std::optional<std::string> find_invariant_violation(const ResidueSet& set);

}  // namespace menon
