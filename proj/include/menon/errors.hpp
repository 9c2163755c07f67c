#pragma once

#include <stdexcept>
#include <string>

namespace menon {

// Argument outside a function's mathematical domain (zero modulus, k = 0,
// non-coprime moduli, non-prime where a prime is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact result would leave the 128-bit integer domain.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A brute-force loop or table would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace menon
