#include "menon/int128.hpp"

#include <algorithm>

namespace menon {

bool pow_fits(Natural base, unsigned exp, Natural& out) {
  Natural result = 1;
  while (exp > 0) {
    if (exp & 1U) {
      if (__builtin_mul_overflow(result, base, &result)) return false;
    }
    exp >>= 1U;
    // A remaining set bit would multiply in at least this square.
    if (exp > 0 && __builtin_mul_overflow(base, base, &base)) return false;
  }
  out = result;
  return true;
}

Natural checked_pow(Natural base, unsigned exp) {
  Natural out;
  if (!pow_fits(base, exp, out)) {
    throw OverflowError("power " + to_string(base) + "^" +
                        std::to_string(exp) + " exceeds the 128-bit domain");
  }
  return out;
}

std::string to_string(Natural v) {
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(Integer v) {
  if (v < 0) return "-" + to_string(magnitude(v));
  return to_string(static_cast<Natural>(v));
}

Natural parse_natural(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw DomainError("expected a non-negative integer");
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
    if (__builtin_mul_overflow(value, Natural{10}, &value) ||
        __builtin_add_overflow(value, Natural(c - '0'), &value)) {
      throw OverflowError("integer literal exceeds the 128-bit domain: " +
                          std::string(text));
    }
  }
  return value;
}

Integer parse_integer(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const Natural mag = parse_natural(text);
  const Natural limit = negative ? (Natural{1} << 127) : (Natural{1} << 127) - 1;
  if (mag > limit) {
    throw OverflowError("signed integer literal exceeds the 128-bit domain");
  }
  return negative ? static_cast<Integer>(Natural{0} - mag)
                  : static_cast<Integer>(mag);
}

std::ostream& operator<<(std::ostream& out, Dec d) {
  return out << to_string(d.value);
}

std::ostream& operator<<(std::ostream& out, SignedDec d) {
  return out << to_string(d.value);
}

}  // namespace menon
