#pragma once

#include <utility>
#include <vector>

#include "subfields/arith/poly.hpp"

namespace subfields::zpoly {

inline Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Primitive part with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& a) {
  if (a.is_zero()) return a;
  Integer g = content(a);
  if (sgn(a.lc()) < 0) g = -g;
  return poly::map_coeffs<Integer>(a, [&](const Integer& c) { return Integer(c / g); });
}

inline Integer norm2_squared(const ZPoly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += c * c;
  return s;
}

inline Integer max_abs(const ZPoly& a) {
  Integer m = 0;
  for (const auto& c : a.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

inline Integer norm1(const ZPoly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += abs(c);
  return s;
}

inline QPoly to_q(const ZPoly& a) {
  return poly::map_coeffs<Rational>(a, [](const Integer& c) { return Rational(c); });
}

// Returns (D*a, D) with D the lcm of the denominators.
inline std::pair<ZPoly, Integer> clear_denominators(const QPoly& a) {
  Integer d = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out = poly::map_coeffs<Integer>(a, [&](const Rational& c) { return Integer(c.get_num() * (d / c.get_den())); });
  return {out, d};
}

inline FpPoly reduce(const ZPoly& a, u64 p) {
  return poly::map_coeffs<u64>(a, [p](const Integer& c) { return mod_word(c, p); });
}

// Throws BadPrime when p divides a denominator.
inline FpPoly reduce(const QPoly& a, u64 p) {
  return poly::map_coeffs<u64>(a, [p](const Rational& c) { return mod_word(c, p); });
}

inline ZPoly lift_symmetric(const FpPoly& a, const PrimeField& f) {
  return poly::map_coeffs<Integer>(a, [&](u64 c) { return Integer(static_cast<long>(f.symmetric(c))); });
}

// --- arithmetic in (Z/mZ)[x], coefficients kept in [0, m) ---

inline ZPoly mod(const ZPoly& a, const Integer& m) {
  return poly::map_coeffs<Integer>(a, [&](const Integer& c) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return r;
  });
}

inline ZPoly symmetric(const ZPoly& a, const Integer& m) {
  return poly::map_coeffs<Integer>(a, [&](const Integer& c) { return symmetric_mod(c, m); });
}

inline ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) { return mod(poly::mul(IntegerRing{}, a, b), m); }

// Division by a monic b in (Z/mZ)[x].
inline std::pair<ZPoly, ZPoly> divrem_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  auto [q, r] = poly::divrem_monic(IntegerRing{}, mod(a, m), b);
  return {mod(q, m), mod(r, m)};
}

inline ZPoly from_fp(const FpPoly& a) {
  return poly::map_coeffs<Integer>(a, [](u64 c) { return to_integer(c); });
}

}  // namespace subfields::zpoly
