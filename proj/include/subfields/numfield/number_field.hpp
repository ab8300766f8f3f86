#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subfields/arith/poly.hpp"
#include "subfields/arith/zpoly.hpp"
#include "subfields/factor/factor_z.hpp"

namespace subfields {

// h(alpha) for h in Q[x] of degree < n, stored by its coefficient vector in
// the power basis 1, alpha, ..., alpha^(n-1). The owning field is the ring
// context passed to every operation.
struct NFElement {
  QPoly rep;

  friend bool operator==(const NFElement& a, const NFElement& b) { return a.rep == b.rep; }
};

using KPoly = DensePoly<NFElement>;

// K = Q(alpha) = Q[x]/(f) for a monic irreducible f in Z[x].
class NumberField {
 public:
  using value_type = NFElement;

  // Checks monicity and irreducibility; throws ReducibleInput or DomainError.
  explicit NumberField(ZPoly min_poly) : f_(std::move(min_poly)) {
    if (f_.degree() < 1) throw DomainError("number field: degree must be >= 1");
    if (f_.lc() != 1) throw DomainError("number field: minimal polynomial must be monic");
    if (!is_irreducible_over_Q(f_)) throw ReducibleInput("f must be irreducible over Q");
    fq_ = zpoly::to_q(f_);
  }

  int degree() const { return f_.degree(); }
  const ZPoly& min_poly() const { return f_; }
  const QPoly& min_poly_q() const { return fq_; }

  NFElement zero() const { return {}; }
  NFElement one() const { return {QPoly{Rational(1)}}; }
  NFElement from_int(std::int64_t k) const { return {QPoly{Rational(static_cast<long>(k))}}; }
  NFElement from_rational(const Rational& q) const { return {QPoly::constant(q)}; }
  NFElement alpha() const { return reduce(QPoly{Rational(0), Rational(1)}); }
  NFElement add(const NFElement& a, const NFElement& b) const { return {poly::add(Q, a.rep, b.rep)}; }
  NFElement sub(const NFElement& a, const NFElement& b) const { return {poly::sub(Q, a.rep, b.rep)}; }
  NFElement neg(const NFElement& a) const { return {poly::neg(Q, a.rep)}; }
  NFElement mul(const NFElement& a, const NFElement& b) const { return reduce(poly::mul(Q, a.rep, b.rep)); }
  bool is_zero(const NFElement& a) const { return a.rep.is_zero(); }
  NFElement inv(const NFElement& a) const {
    if (a.rep.is_zero()) throw DomainError("division by zero in K");
    auto [g, s, t] = poly::ext_gcd(Q, a.rep, fq_);
    if (g.degree() != 0) throw InternalDefect("non-invertible element: minimal polynomial is reducible");
    return reduce(s);
  }
  NFElement reduce(const QPoly& h) const { return {poly::rem_monic(Q, h, fq_)}; }
  bool is_rational(const NFElement& a) const { return a.rep.degree() <= 0; }

  // f'(alpha), the denominator that clears every coefficient of a monic
  // factor of f into Z[alpha].
  NFElement derivative_at_alpha() const { return reduce(poly::derivative(Q, fq_)); }

  // Coordinates in the power basis, padded to length n.
  std::vector<Rational> coordinates(const NFElement& a) const {
    std::vector<Rational> v(static_cast<std::size_t>(degree()));
    for (std::size_t i = 0; i < a.rep.size(); ++i) v[i] = a.rep[i];
    return v;
  }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.f_ == b.f_; }

 private:
  static constexpr RationalField Q{};
  ZPoly f_;
  QPoly fq_;
};

// --- polynomials over K ---

// Lift q in Q[x] to K[x] with constant coefficients.
inline KPoly kpoly_from_q(const QPoly& q) {
  return poly::map_coeffs<NFElement>(q, [](const Rational& c) { return NFElement{QPoly::constant(c)}; });
}

inline KPoly kpoly_from_z(const ZPoly& z) { return kpoly_from_q(zpoly::to_q(z)); }

// x - beta
inline KPoly kpoly_linear(const NumberField& K, const NFElement& beta) {
  return KPoly(std::vector<NFElement>{K.neg(beta), K.one()});
}

// Remainder of a by a monic b over K.
inline KPoly kpoly_rem(const NumberField& K, const KPoly& a, const KPoly& b) { return poly::rem_monic(K, a, b); }

inline std::pair<KPoly, KPoly> kpoly_divrem(const NumberField& K, const KPoly& a, const KPoly& b) {
  return poly::divrem_monic(K, a, b);
}

// h(x) - h(alpha) as a polynomial over K, where beta = h(alpha).
inline KPoly kpoly_minus_value(const NumberField& K, const NFElement& beta) {
  return poly::sub(K, kpoly_from_q(beta.rep), KPoly::constant(beta));
}

// Evaluate a rational polynomial h at an element of K: h(beta).
inline NFElement nf_eval(const NumberField& K, const QPoly& h, const NFElement& beta) {
  NFElement acc;
  for (std::size_t i = h.size(); i-- > 0;) acc = K.add(K.mul(acc, beta), K.from_rational(h[i]));
  return acc;
}

inline NFElement nf_add(const NumberField& K, const NFElement& a, const NFElement& b) { return K.add(a, b); }
inline NFElement nf_mul(const NumberField& K, const NFElement& a, const NFElement& b) { return K.mul(a, b); }
inline NFElement nf_inv(const NumberField& K, const NFElement& a) { return K.inv(a); }

// f viewed in K[x].
inline KPoly min_poly_over_K(const NumberField& K) { return kpoly_from_z(K.min_poly()); }

// Conversion of general integer input to the monic model: for
// g = sum a_i x^i with lc c, F(y) = c^(n-1) g(y / c) is monic with root
// beta = c * alpha. Primitive part and sign are normalized first.
struct MonicModel {
  ZPoly input;   // primitive, positive leading coefficient
  ZPoly monic;   // F
  Integer scale; // beta = scale * alpha
};

inline MonicModel to_monic_model(const ZPoly& g) {
  if (g.degree() < 1) throw DomainError("polynomial must have degree >= 1");
  MonicModel m;
  m.input = zpoly::primitive_part(g);
  m.scale = m.input.lc();
  const std::size_t n = static_cast<std::size_t>(m.input.degree());
  std::vector<Integer> c(n + 1);
  Integer power = 1;  // c^(n-1-i), built from the top down
  c[n] = 1;
  for (std::size_t i = n; i-- > 0;) {
    c[i] = m.input[i] * power;
    power *= m.scale;
  }
  m.monic = ZPoly(std::move(c));
  return m;
}

// Rewrite an element given as h(beta) in terms of the input root alpha:
// h(beta) = h(scale * alpha).
inline QPoly to_input_basis(const MonicModel& m, const NFElement& e) {
  std::vector<Rational> out(e.rep.size());
  Integer power = 1;
  for (std::size_t i = 0; i < e.rep.size(); ++i) {
    out[i] = e.rep[i] * Rational(power);
    power *= m.scale;
  }
  return QPoly(std::move(out));
}

}  // namespace subfields
