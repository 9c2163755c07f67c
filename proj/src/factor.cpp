#include "menon/factor.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>

namespace menon {

namespace {

// Trial division covers every prime below this bound, so any n below
// kTrialBound^2 left after trial division is 1 or prime.
constexpr std::uint64_t kTrialBound = 1U << 14;

// Offsets of the mod-30 wheel after 2, 3, 5.
constexpr std::array<std::uint8_t, 8> kWheelSteps = {4, 2, 4, 2, 4, 6, 2, 6};

struct U256 {
  Natural hi;
  Natural lo;
};

U256 mul_wide(Natural a, Natural b) {
  const auto a0 = static_cast<std::uint64_t>(a);
  const auto a1 = static_cast<std::uint64_t>(a >> 64);
  const auto b0 = static_cast<std::uint64_t>(b);
  const auto b1 = static_cast<std::uint64_t>(b >> 64);
  const Natural p00 = Natural{a0} * b0;
  const Natural p01 = Natural{a0} * b1;
  const Natural p10 = Natural{a1} * b0;
  const Natural p11 = Natural{a1} * b1;
  const Natural mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) +
                      static_cast<std::uint64_t>(p10);
  return {p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64),
          (mid << 64) | static_cast<std::uint64_t>(p00)};
}

// Montgomery arithmetic modulo an odd n > 1 with R = 2^128. Values handed
// in and out of the arithmetic members are Montgomery representatives.
class Montgomery {
 public:
  explicit Montgomery(Natural n) : n_(n) {
    Natural inv = n;  // correct to 3 bits for odd n
    for (int i = 0; i < 7; ++i) inv *= Natural{2} - n * inv;
    neg_inv_ = Natural{0} - inv;
    r1_ = (Natural{0} - n) % n;
    r2_ = r1_;
    for (int i = 0; i < 128; ++i) r2_ = add(r2_, r2_);
  }

  Natural modulus() const { return n_; }
  Natural one() const { return r1_; }

  Natural to(Natural a) const { return mul(a % n_, r2_); }
  Natural from(Natural a) const { return reduce({0, a}); }

  Natural add(Natural a, Natural b) const {
    Natural r;
    const bool carry = __builtin_add_overflow(a, b, &r);
    if (carry || r >= n_) r -= n_;
    return r;
  }

  Natural sub(Natural a, Natural b) const {
    return a >= b ? a - b : a + (n_ - b);
  }

  Natural mul(Natural a, Natural b) const { return reduce(mul_wide(a, b)); }

  Natural half(Natural a) const {
    return (a & 1U) ? (a >> 1) + (n_ >> 1) + 1 : a >> 1;
  }

  Natural pow(Natural base, Natural exp) const {
    Natural result = r1_;
    while (exp > 0) {
      if (exp & 1U) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return result;
  }

 private:
  Natural reduce(U256 t) const {
    const Natural m = t.lo * neg_inv_;
    const U256 mn = mul_wide(m, n_);
    // t.lo + mn.lo vanishes mod 2^128; it carries exactly when t.lo != 0.
    const Natural carry = t.lo != 0 ? 1 : 0;
    Natural r;
    bool over = __builtin_add_overflow(t.hi, mn.hi, &r);
    over |= __builtin_add_overflow(r, carry, &r);
    if (over || r >= n_) r -= n_;
    return r;
  }

  Natural n_;
  Natural neg_inv_;
  Natural r1_;
  Natural r2_;
};

bool strong_probable_prime(const Montgomery& mont, Natural base) {
  const Natural n = mont.modulus();
  base %= n;
  if (base == 0) return true;
  Natural d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  const Natural one = mont.one();
  const Natural minus_one = mont.sub(0, one);
  Natural x = mont.pow(mont.to(base), d);
  if (x == one || x == minus_one) return true;
  for (int r = 1; r < s; ++r) {
    x = mont.mul(x, x);
    if (x == minus_one) return true;
    if (x == one) return false;
  }
  return false;
}

int jacobi(Integer a_signed, Natural n) {
  Natural a = a_signed < 0 ? n - magnitude(a_signed) % n
                           : static_cast<Natural>(a_signed) % n;
  int result = 1;
  while (a != 0) {
    while ((a & 1U) == 0) {
      a >>= 1;
      const auto r = static_cast<unsigned>(n & 7U);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3U) == 3 && (n & 3U) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Natural to_residue(const Montgomery& mont, Integer v) {
  const Natural n = mont.modulus();
  const Natural r = magnitude(v) % n;
  return mont.to(v < 0 && r != 0 ? n - r : r);
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
bool strong_lucas_probable_prime(const Montgomery& mont) {
  const Natural n = mont.modulus();
  const Natural root = isqrt(n);
  if (root * root == n) return false;

  Integer d = 5;
  for (;;) {
    const int j = jacobi(d, n);
    if (j == -1) break;
    if (j == 0 && magnitude(d) != n) return false;
    d = d > 0 ? -(d + 2) : -d + 2;
  }
  const Integer q = (1 - d) / 4;

  const Natural mont_d = to_residue(mont, d);
  const Natural mont_q = to_residue(mont, q);

  Natural k = n + 1;  // n is odd and below 2^128 - 1 here
  int s = 0;
  while ((k & 1U) == 0) {
    k >>= 1;
    ++s;
  }

  // Left-to-right ladder over the bits of k computing U_k, V_k, Q^k.
  Natural u = mont.one();
  Natural v = mont.one();  // V_1 = P = 1
  Natural qk = mont_q;
  int top = 127;
  while (((k >> top) & 1U) == 0) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    u = mont.mul(u, v);
    v = mont.sub(mont.mul(v, v), mont.add(qk, qk));
    qk = mont.mul(qk, qk);
    if ((k >> bit) & 1U) {
      const Natural u_next = mont.half(mont.add(u, v));
      const Natural v_next = mont.half(mont.add(mont.mul(mont_d, u), v));
      u = u_next;
      v = v_next;
      qk = mont.mul(qk, mont_q);
    }
  }

  if (u == 0 || v == 0) return true;
  for (int r = 1; r < s; ++r) {
    v = mont.sub(mont.mul(v, v), mont.add(qk, qk));
    if (v == 0) return true;
    qk = mont.mul(qk, qk);
  }
  return false;
}

// Miller-Rabin with the first 13 prime bases is proven correct below this
// bound (Sorenson and Webster).
constexpr Natural kMillerRabinProvenBound =
    (Natural{179817} << 64) | Natural{0x51adc5b22410a5fdULL};

bool is_prime_large_odd(Natural n) {
  const Montgomery mont(n);
  if (n < kMillerRabinProvenBound) {
    for (unsigned base : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U,
                          37U, 41U}) {
      if (!strong_probable_prime(mont, base)) return false;
    }
    return true;
  }
  // Baillie-PSW beyond the proven Miller-Rabin range.
  return strong_probable_prime(mont, 2) && strong_lucas_probable_prime(mont);
}

template <typename T>
bool trial_is_prime(T n) {
  if (n < 2) return false;
  for (T p : {T{2}, T{3}, T{5}}) {
    if (n % p == 0) return n == p;
  }
  T p = 7;
  std::size_t step = 0;
  while (p < kTrialBound) {
    if (p * p > n) return true;
    if (n % p == 0) return false;
    p += kWheelSteps[step];
    step = (step + 1) % kWheelSteps.size();
  }
  return true;  // caller guarantees n < kTrialBound^2 or has handed off
}

// Removes every prime factor below kTrialBound from n, appending them.
template <typename T>
T strip_small_factors(T n, std::vector<PrimePower>& out) {
  auto take = [&](T p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  take(5);
  T p = 7;
  std::size_t step = 0;
  while (p < kTrialBound && p * p <= n) {
    take(p);
    p += kWheelSteps[step];
    step = (step + 1) % kWheelSteps.size();
  }
  return n;
}

// Brent's variant of Pollard rho. Returns a nontrivial divisor of the odd
// composite n. The generator is seeded with a constant so that results are
// reproducible from run to run.
Natural rho_split(Natural n) {
  const Montgomery mont(n);
  std::mt19937_64 rng(0x6d656e6f6eULL);
  for (;;) {
    const Natural c = mont.to((Natural{rng()} << 64 | rng()) % (n - 1) + 1);
    Natural y = mont.to((Natural{rng()} << 64 | rng()) % n);
    auto step = [&](Natural x) { return mont.add(mont.mul(x, x), c); };

    constexpr int kBlock = 128;
    Natural g = 1;
    Natural q = mont.one();
    Natural x = y;
    Natural ys = y;
    for (Natural r = 1; g == 1; r <<= 1) {
      x = y;
      for (Natural i = 0; i < r; ++i) y = step(y);
      for (Natural done = 0; done < r && g == 1; done += kBlock) {
        ys = y;
        const Natural limit = std::min<Natural>(kBlock, r - done);
        for (Natural i = 0; i < limit; ++i) {
          y = step(y);
          q = mont.mul(q, mont.sub(x, y));
        }
        g = std::gcd(mont.from(q), n);
      }
    }
    if (g == n) {
      // The block overshot; replay one step at a time.
      do {
        ys = step(ys);
        g = std::gcd(mont.from(mont.sub(x, ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(Natural n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  const Natural root = isqrt(n);
  if (root * root == n) {
    const std::size_t first = out.size();
    factor_large(root, out);
    for (std::size_t i = first; i < out.size(); ++i) out[i].exponent *= 2;
    return;
  }
  const Natural d = rho_split(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

std::vector<PrimePower> normalize(std::vector<PrimePower> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const PrimePower& a, const PrimePower& b) {
              return a.prime < b.prime;
            });
  std::vector<PrimePower> merged;
  merged.reserve(raw.size());
  for (const auto& pp : raw) {
    if (!merged.empty() && merged.back().prime == pp.prime) {
      merged.back().exponent += pp.exponent;
    } else {
      merged.push_back(pp);
    }
  }
  return merged;
}

}  // namespace

Natural isqrt(Natural n) {
  if (n < 2) return n;
  // Newton iteration from an upper bound 2^ceil(bits/2).
  int bits = 0;
  for (Natural t = n; t != 0; t >>= 1) ++bits;
  Natural x = Natural{1} << ((bits + 1) / 2);
  for (;;) {
    const Natural y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

bool is_prime(Natural n) {
  if (n < Natural{kTrialBound} * kTrialBound) {
    return trial_is_prime(static_cast<std::uint64_t>(n));
  }
  if ((n & 1U) == 0) return false;
  for (unsigned p : {3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
    if (n % p == 0) return false;
  }
  return is_prime_large_odd(n);
}

Factorization factorize(Natural n) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  std::vector<PrimePower> raw;
  Natural rest;
  if (n <= ~std::uint64_t{0}) {
    rest = strip_small_factors(static_cast<std::uint64_t>(n), raw);
  } else {
    rest = strip_small_factors(n, raw);
  }
  if (rest != 1) {
    if (rest < Natural{kTrialBound} * kTrialBound) {
      raw.push_back({rest, 1});
    } else {
      factor_large(rest, raw);
    }
  }
  return Factorization::trusted(normalize(std::move(raw)));
}

std::vector<Natural> divisors(const Factorization& f) {
  std::vector<Natural> result{1};
  for (const auto& [p, v] : f) {
    const std::size_t base_count = result.size();
    Natural power = 1;
    for (unsigned e = 1; e <= v; ++e) {
      power *= p;
      for (std::size_t i = 0; i < base_count; ++i) {
        result.push_back(result[i] * power);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Natural> divisors(Natural n) { return divisors(factorize(n)); }

Factorization::Factorization(std::vector<PrimePower> pairs)
    : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].exponent == 0) {
      throw DomainError("factorization exponent must be positive");
    }
    if (i > 0 && pairs_[i - 1].prime >= pairs_[i].prime) {
      throw DomainError("factorization primes must be strictly increasing");
    }
    if (!is_prime(pairs_[i].prime)) {
      throw DomainError("factorization base " + to_string(pairs_[i].prime) +
                        " is not prime");
    }
  }
}

Factorization Factorization::trusted(std::vector<PrimePower> pairs) {
  Factorization f;
  f.pairs_ = std::move(pairs);
  return f;
}

Natural Factorization::value() const {
  Natural n = 1;
  for (const auto& [p, v] : pairs_) n = checked_mul(n, checked_pow(p, v));
  return n;
}

Natural Factorization::divisor_count() const {
  Natural count = 1;
  for (const auto& pp : pairs_) count = checked_mul(count, Natural{pp.exponent} + 1);
  return count;
}

}  // namespace menon
