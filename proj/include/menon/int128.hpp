#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "menon/errors.hpp"

namespace menon {

// Every value in the library lives in unsigned 128-bit arithmetic. Signed
// inputs (the shift s, translation factors, residues offsets) use the signed
// counterpart. Nothing wraps: operations that would leave the domain throw
// OverflowError.
using Natural = unsigned __int128;
using Integer = __int128;

inline constexpr Natural kNaturalMax = ~Natural{0};

inline Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("128-bit addition overflow");
  }
  return r;
}

inline Natural checked_sub(Natural a, Natural b) {
  if (b > a) throw OverflowError("128-bit subtraction underflow");
  return a - b;
}

inline Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("128-bit multiplication overflow");
  }
  return r;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("signed 128-bit multiplication overflow");
  }
  return r;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("signed 128-bit subtraction overflow");
  }
  return r;
}

// base^exp, throwing on overflow. 0^0 is 1.
Natural checked_pow(Natural base, unsigned exp);

// Like checked_pow but reports overflow as "does not fit" instead of throwing.
bool pow_fits(Natural base, unsigned exp, Natural& out);

// |a| as a Natural; exact for the most negative Integer.
constexpr Natural magnitude(Integer a) {
  return a < 0 ? Natural{0} - static_cast<Natural>(a) : static_cast<Natural>(a);
}

// |a - b| for a natural a and signed b, exact over the whole domain pair.
constexpr Natural abs_diff(Natural a, Integer b) {
  if (b < 0) {
    Natural r = a + magnitude(b);
    if (r < a) throw OverflowError("|a - s| exceeds the 128-bit domain");
    return r;
  }
  const auto ub = static_cast<Natural>(b);
  return a >= ub ? a - ub : ub - a;
}

std::string to_string(Natural v);
std::string to_string(Integer v);

// Decimal parsing with full-range checks. Throws DomainError on malformed
// text and OverflowError when the value does not fit.
Natural parse_natural(std::string_view text);
Integer parse_integer(std::string_view text);

// Stream helpers; named wrappers avoid overloading operator<< on builtins.
struct Dec {
  Natural value;
};
struct SignedDec {
  Integer value;
};
std::ostream& operator<<(std::ostream& out, Dec d);
std::ostream& operator<<(std::ostream& out, SignedDec d);

}  // namespace menon
