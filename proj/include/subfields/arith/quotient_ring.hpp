#pragma once

#include <optional>

#include "subfields/arith/poly.hpp"

namespace subfields {

// F_p[t]/(m(t)) for a monic m of positive degree. Elements are FpPoly of
// degree < deg m. Not a field in general: inverses are partial.
class QuotientRing {
 public:
  using value_type = FpPoly;

  QuotientRing(PrimeField field, FpPoly modulus) : f_(field), m_(std::move(modulus)) {
    if (m_.degree() < 1 || !poly::is_monic(f_, m_)) throw DomainError("QuotientRing: modulus must be monic of degree >= 1");
  }

  const PrimeField& base() const { return f_; }
  const FpPoly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }

  FpPoly zero() const { return {}; }
  FpPoly one() const { return FpPoly::constant(1); }
  FpPoly from_int(std::int64_t k) const { return FpPoly::constant(f_.from_int(k)); }
  FpPoly from_base(u64 c) const { return FpPoly::constant(c); }
  FpPoly add(const FpPoly& a, const FpPoly& b) const { return poly::add(f_, a, b); }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const { return poly::sub(f_, a, b); }
  FpPoly neg(const FpPoly& a) const { return poly::neg(f_, a); }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return poly::rem_monic(f_, poly::mul(f_, a, b), m_); }
  bool is_zero(const FpPoly& a) const { return a.is_zero(); }
  FpPoly reduce(const FpPoly& a) const { return poly::rem_monic(f_, a, m_); }
  // The generator t.
  FpPoly gen() const { return m_.degree() == 1 ? reduce(FpPoly{0, 1}) : FpPoly{0, 1}; }

  // Inverse when gcd(a, m) = 1 in F_p[t]; nullopt for zero divisors.
  std::optional<FpPoly> inv(const FpPoly& a) const {
    if (a.is_zero()) return std::nullopt;
    auto [g, s, t] = poly::ext_gcd(f_, a, m_);
    if (g.degree() != 0) return std::nullopt;
    return reduce(s);
  }

 private:
  PrimeField f_;
  FpPoly m_;
};

inline std::optional<FpPoly> ring_inverse(const QuotientRing& ring, const FpPoly& e) { return ring.inv(e); }

}  // namespace subfields
