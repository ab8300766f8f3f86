#pragma once

#include <span>
#include <vector>

#include "subfields/arith/zpoly.hpp"

namespace subfields {

namespace hensel_detail {

struct Pair {
  ZPoly g, h, s, t;
};

// One quadratic lifting step from modulus m to M (M | m^2): given
// target = g h (mod m), s g + t h = 1 (mod m), g and h monic, returns the
// same data modulo M.
inline Pair step(const ZPoly& target, const Pair& in, const Integer& M) {
  using zpoly::divrem_mod;
  using zpoly::mod;
  using zpoly::mul_mod;
  const auto& [g, h, s, t] = in;
  ZPoly e = mod(poly::sub(IntegerRing{}, target, poly::mul(IntegerRing{}, g, h)), M);
  auto [q, r] = divrem_mod(mul_mod(s, e, M), h, M);
  ZPoly g2 = mod(poly::add(IntegerRing{}, g, poly::add(IntegerRing{}, poly::mul(IntegerRing{}, t, e), poly::mul(IntegerRing{}, q, g))), M);
  ZPoly h2 = mod(poly::add(IntegerRing{}, h, r), M);
  ZPoly b = mod(poly::sub(IntegerRing{}, poly::add(IntegerRing{}, poly::mul(IntegerRing{}, s, g2), poly::mul(IntegerRing{}, t, h2)), ZPoly{1}), M);
  auto [c, d] = divrem_mod(mul_mod(s, b, M), h2, M);
  ZPoly s2 = mod(poly::sub(IntegerRing{}, s, d), M);
  ZPoly t2 = mod(poly::sub(IntegerRing{}, t, poly::add(IntegerRing{}, poly::mul(IntegerRing{}, t, b), poly::mul(IntegerRing{}, c, g2))), M);
  return {g2, h2, s2, t2};
}

inline FpPoly product(const PrimeField& f, std::span<const FpPoly> fs) {
  FpPoly acc = FpPoly::constant(1);
  for (const auto& u : fs) acc = poly::mul(f, acc, u);
  return acc;
}

inline void lift(const ZPoly& target, std::span<const FpPoly> factors, const PrimeField& f, const Integer& pa,
                 std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(zpoly::mod(target, pa));
    return;
  }
  const std::size_t half = factors.size() / 2;
  auto left = factors.subspan(0, half), right = factors.subspan(half);
  FpPoly g = product(f, left), h = product(f, right);
  auto [d, s, t] = poly::ext_gcd(f, g, h);
  if (d.degree() != 0) throw DomainError("hensel_lift: factors are not pairwise coprime");
  const Integer p = to_integer(f.modulus());
  Pair cur{zpoly::from_fp(g), zpoly::from_fp(h), zpoly::from_fp(s), zpoly::from_fp(t)};
  Integer m = p;
  while (m < pa) {
    Integer M = m * m;
    if (M > pa) M = pa;
    cur = step(zpoly::mod(target, M), cur, M);
    m = M;
  }
  lift(cur.g, left, f, pa, out);
  lift(cur.h, right, f, pa, out);
}

}  // namespace hensel_detail

// Lifts a factorization target = prod factors (mod p) into monic factors
// modulo p^a. `target` must be monic modulo p^a; the factors must be monic
// and pairwise coprime modulo p. Output order follows the input order.
inline std::vector<ZPoly> hensel_lift(const ZPoly& target, std::span<const FpPoly> factors, const PrimeField& f,
                                      unsigned a) {
  if (factors.empty()) throw DomainError("hensel_lift: no factors");
  for (const auto& u : factors)
    if (!poly::is_monic(f, u)) throw DomainError("hensel_lift: factors must be monic");
  Integer pa;
  mpz_pow_ui(pa.get_mpz_t(), to_integer(f.modulus()).get_mpz_t(), a);
  if (zpoly::reduce(target, f.modulus()) != hensel_detail::product(f, factors))
    throw DomainError("hensel_lift: factors do not multiply to the target mod p");
  std::vector<ZPoly> out;
  hensel_detail::lift(target, factors, f, pa, out);
  return out;
}

}  // namespace subfields
