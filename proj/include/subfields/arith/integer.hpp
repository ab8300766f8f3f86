#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "subfields/errors.hpp"

namespace subfields {

using Integer = mpz_class;
// gmp keeps mpq values canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Word-size modular helpers. All moduli are below 2^62 so a + b never
// overflows and products fit in 128 bits.
namespace word {

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

// Inverse by extended Euclid; nullopt when gcd(a, p) != 1.
inline std::optional<u64> inv(u64 a, u64 p) {
  std::int64_t t0 = 0, t1 = 1;
  u64 r0 = p, r1 = a % p;
  while (r1 != 0) {
    u64 q = r0 / r1;
    u64 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    // |t| stays below p, so this never overflows for p < 2^62.
    std::int64_t t2 = t0 - static_cast<std::int64_t>(q) * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  return t0 < 0 ? static_cast<u64>(t0 + static_cast<std::int64_t>(p)) : static_cast<u64>(t0);
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = pow(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Smallest prime strictly greater than `after`.
inline u64 next_prime(u64 after) {
  u64 c = after + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace word

inline u64 mod_word(const Integer& a, u64 p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r.get_ui();
}

static_assert(sizeof(unsigned long) == sizeof(u64), "LP64 expected");

inline Integer to_integer(u64 v) { return Integer(static_cast<unsigned long>(v)); }

// Image of a rational in F_p; throws BadPrime when p divides the denominator.
inline u64 mod_word(const Rational& a, u64 p) {
  u64 den = mod_word(a.get_den(), p);
  auto inv = word::inv(den, p);
  if (!inv) throw BadPrime("bad prime " + std::to_string(p) + ": divides a denominator");
  return word::mul(mod_word(a.get_num(), p), *inv, p);
}

// Representative of v in (-m/2, m/2].
inline Integer symmetric_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

inline Integer isqrt_ceil(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace subfields
