#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "menon/cap.hpp"
#include "menon/factor.hpp"
#include "menon/int128.hpp"

namespace menon {

// Largest sieve limit accepted by build_sieve (4 bytes per entry).
inline constexpr std::uint64_t kMaxSieveLimit = 250'000'000;

// Smallest-prime-factor table over [2, limit], built by a linear sieve.
class SpfSieve {
 public:
  std::uint64_t limit() const { return limit_; }

  // Requires 2 <= m <= limit.
  std::uint32_t smallest_prime_factor(std::uint64_t m) const;

  bool is_prime(std::uint64_t m) const;

  // Factorization by repeated spf division; requires 1 <= m <= limit.
  Factorization factorize(std::uint64_t m) const;

  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  friend SpfSieve build_sieve(std::uint64_t limit);

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// DomainError for limit < 2, ResourceError above kMaxSieveLimit.
SpfSieve build_sieve(std::uint64_t limit);

// One tabulated m. menon_lhs and verified are present only when brute-force
// summation was requested.
struct BatchRow {
  Natural m = 1;
  Natural phi_k = 1;
  Natural d_s_k = 1;
  Natural pillai_k = 1;
  std::optional<Natural> menon_lhs;
  Natural menon_rhs = 1;
  std::optional<bool> verified;

  friend bool operator==(const BatchRow&, const BatchRow&) = default;
};

struct BatchOptions {
  bool with_bruteforce = false;
  IterationCap cap;
  // Worker threads for row computation; rows are still emitted in order.
  unsigned threads = 1;
};

using RowSink = std::function<void(const BatchRow&)>;

// Streams rows for m = 1..n in ascending order. Closed forms come from sieve
// factorizations. With brute force enabled n^k must not exceed the cap.
void batch_table(std::uint64_t n, Integer s, unsigned k,
                 const BatchOptions& options, const RowSink& sink);

std::vector<BatchRow> batch_table(std::uint64_t n, Integer s, unsigned k,
                                  const BatchOptions& options = {});

// Total brute-force iterations sum_{m<=n} m^k, or nullopt on overflow.
std::optional<Natural> bruteforce_work(std::uint64_t n, unsigned k);

}  // namespace menon
