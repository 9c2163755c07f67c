#include "menon/batch.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "menon/arith.hpp"
#include "menon/sums.hpp"

namespace menon {

SpfSieve build_sieve(std::uint64_t limit) {
  if (limit < 2) throw DomainError("build_sieve: limit must be at least 2");
  if (limit > kMaxSieveLimit) {
    throw ResourceError("build_sieve: limit " + std::to_string(limit) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxSieveLimit));
  }
  SpfSieve sieve;
  sieve.limit_ = limit;
  sieve.spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (sieve.spf_[i] == 0) {
      sieve.spf_[i] = static_cast<std::uint32_t>(i);
      sieve.primes_.push_back(static_cast<std::uint32_t>(i));
    }
    // Each composite i * p is struck exactly once, by its smallest prime p.
    for (std::uint32_t p : sieve.primes_) {
      if (p > sieve.spf_[i] || i * p > limit) break;
      sieve.spf_[i * p] = p;
    }
  }
  return sieve;
}

std::uint32_t SpfSieve::smallest_prime_factor(std::uint64_t m) const {
  if (m < 2 || m > limit_) {
    throw DomainError("smallest_prime_factor: " + std::to_string(m) +
                      " outside [2, " + std::to_string(limit_) + "]");
  }
  return spf_[m];
}

bool SpfSieve::is_prime(std::uint64_t m) const {
  return m >= 2 && smallest_prime_factor(m) == m;
}

Factorization SpfSieve::factorize(std::uint64_t m) const {
  if (m == 0 || m > limit_) {
    throw DomainError("SpfSieve::factorize: " + std::to_string(m) +
                      " outside [1, " + std::to_string(limit_) + "]");
  }
  std::vector<PrimePower> pairs;
  while (m > 1) {
    const std::uint32_t p = spf_[m];
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    pairs.push_back({p, e});
  }
  return Factorization::trusted(std::move(pairs));
}

std::optional<Natural> bruteforce_work(std::uint64_t n, unsigned k) {
  Natural total = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    Natural mk;
    if (!pow_fits(m, k, mk) || __builtin_add_overflow(total, mk, &total)) {
      return std::nullopt;
    }
  }
  return total;
}

namespace {

struct RowRules {
  MultiplicativeFunction phi;
  MultiplicativeFunction divisors;
  MultiplicativeFunction pillai;
};

BatchRow compute_row(const SpfSieve& sieve, const RowRules& rules,
                     std::uint64_t m, Integer s, unsigned k,
                     const BatchOptions& options) {
  const Factorization f = sieve.factorize(m);
  BatchRow row;
  row.m = m;
  row.phi_k = eval_multiplicative(rules.phi, f);
  row.d_s_k = eval_multiplicative(rules.divisors, f);
  row.pillai_k = eval_multiplicative(rules.pillai, f);
  row.menon_rhs = checked_mul(row.d_s_k, row.phi_k);
  if (options.with_bruteforce) {
    row.menon_lhs = menon_sum_bruteforce({m, s, k}, options.cap);
    row.verified = *row.menon_lhs == row.menon_rhs;
  }
  return row;
}

}  // namespace

void batch_table(std::uint64_t n, Integer s, unsigned k,
                 const BatchOptions& options, const RowSink& sink) {
  if (n == 0) throw DomainError("batch_table: n must be positive");
  if (k == 0) throw DomainError("batch_table: k must be positive");
  // Every row needs m^k in range; the largest m decides.
  const Natural nk = checked_pow(n, k);
  if (options.with_bruteforce) {
    require_within_cap(nk, options.cap, "batch_table brute-force column");
  }

  const SpfSieve sieve = build_sieve(std::max<std::uint64_t>(n, 2));
  const RowRules rules{cohen_phi_rule(k), d_s_k_rule(s, k), pillai_rule(k)};

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    for (std::uint64_t m = 1; m <= n; ++m) {
      sink(compute_row(sieve, rules, m, s, k, options));
    }
    return;
  }

  // Fixed-size blocks: workers fill disjoint slots, then the block is
  // flushed in order before the next one starts.
  constexpr std::uint64_t kBlock = 4096;
  std::vector<BatchRow> block;
  for (std::uint64_t first = 1; first <= n; first += kBlock) {
    const std::uint64_t count = std::min(kBlock, n - first + 1);
    block.assign(count, BatchRow{});
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::uint64_t i = t; i < count; i += threads) {
            block[i] = compute_row(sieve, rules, first + i, s, k, options);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    workers.clear();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
    for (const auto& row : block) sink(row);
  }
}

std::vector<BatchRow> batch_table(std::uint64_t n, Integer s, unsigned k,
                                  const BatchOptions& options) {
  std::vector<BatchRow> rows;
  batch_table(n, s, k, options,
              [&rows](const BatchRow& row) { rows.push_back(row); });
  return rows;
}

}  // namespace menon
