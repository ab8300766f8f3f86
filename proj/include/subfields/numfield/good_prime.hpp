#pragma once

#include <optional>
#include <string>

#include "subfields/arith/quotient_ring.hpp"
#include "subfields/factor/factor_fp.hpp"
#include "subfields/numfield/number_field.hpp"

namespace subfields {

// A prime p for which f mod p keeps its degree and stays separable.
struct GoodPrime {
  u64 p = 0;
  FpPoly fbar;

  PrimeField field() const { return PrimeField(p); }
  QuotientRing ring() const { return QuotientRing(PrimeField(p), fbar); }
};

inline std::optional<GoodPrime> make_good_prime(const NumberField& K, u64 p) {
  if (!word::is_prime(p)) return std::nullopt;
  PrimeField F(p);
  FpPoly fbar = zpoly::reduce(K.min_poly(), p);
  if (fbar.degree() != K.degree()) return std::nullopt;
  if (!fp::is_squarefree(F, fbar)) return std::nullopt;
  return GoodPrime{p, std::move(fbar)};
}

// Smallest good prime > after. With require_root, additionally asks that
// f have a root modulo p.
inline GoodPrime next_good_prime(const NumberField& K, u64 after, bool require_root = false) {
  for (u64 p = word::next_prime(after);; p = word::next_prime(p)) {
    auto gp = make_good_prime(K, p);
    if (!gp) continue;
    if (require_root) {
      PrimeField F(p);
      FpPoly xp = poly::pow_mod(F, FpPoly{0, 1}, to_integer(p), gp->fbar);
      if (poly::gcd(F, gp->fbar, poly::sub(F, xp, FpPoly{0, 1})).degree() < 1) continue;
    }
    return *gp;
  }
}

// Image of h(alpha) in F_p[t]/(fbar) under alpha -> t; throws BadPrime when
// p divides a denominator.
inline FpPoly reduce_mod(const NFElement& e, const GoodPrime& gp) { return zpoly::reduce(e.rep, gp.p); }

inline DensePoly<FpPoly> reduce_mod(const KPoly& a, const GoodPrime& gp) {
  return poly::map_coeffs<FpPoly>(a, [&](const NFElement& c) { return reduce_mod(c, gp); });
}

// Base for the word-size primes used by the multimodular algorithms.
inline constexpr u64 large_prime_base = u64{1} << 61;

}  // namespace subfields
