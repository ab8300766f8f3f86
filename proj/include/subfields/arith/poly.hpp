#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

#include "subfields/arith/rings.hpp"
#include "subfields/errors.hpp"

namespace subfields {

// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i. The
// zero polynomial has no coefficients and degree -1; otherwise the top
// coefficient is nonzero. Coefficients must be canonical so that the
// value-initialized C{} is the only representation of zero.
template <class C>
class DensePoly {
 public:
  using coeff_type = C;

  DensePoly() = default;
  explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static DensePoly constant(C c) { return DensePoly(std::vector<C>{std::move(c)}); }
  static DensePoly monomial(C c, std::size_t k) {
    std::vector<C> v(k + 1);
    v[k] = std::move(c);
    return DensePoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const C& lc() const { return c_.back(); }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }
  const std::vector<C>& coeffs() const { return c_; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C{}) c_.pop_back();
  }

  std::vector<C> c_;
};

namespace poly {

template <class R>
using Poly = DensePoly<typename R::value_type>;

template <CoefficientRing R>
Poly<R> add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  std::vector<typename R::value_type> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size())
      out[i] = ring.add(a[i], b[i]);
    else
      out[i] = i < a.size() ? a[i] : b[i];
  }
  return Poly<R>(std::move(out));
}

template <CoefficientRing R>
Poly<R> neg(const R& ring, const Poly<R>& a) {
  std::vector<typename R::value_type> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.neg(a[i]);
  return Poly<R>(std::move(out));
}

template <CoefficientRing R>
Poly<R> sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  std::vector<typename R::value_type> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size())
      out[i] = ring.sub(a[i], b[i]);
    else
      out[i] = i < a.size() ? a[i] : ring.neg(b[i]);
  }
  return Poly<R>(std::move(out));
}

template <CoefficientRing R>
Poly<R> scale(const R& ring, const Poly<R>& a, const typename R::value_type& c) {
  std::vector<typename R::value_type> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(a[i], c);
  return Poly<R>(std::move(out));
}

// Multiply by x^k.
template <class C>
DensePoly<C> shift(const DensePoly<C>& a, std::size_t k) {
  if (a.is_zero()) return a;
  std::vector<C> out(k);
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return DensePoly<C>(std::move(out));
}

namespace detail {

inline constexpr std::size_t karatsuba_threshold = 32;

template <class R, class V>
void schoolbook(const R& ring, const V* a, std::size_t na, const V* b, std::size_t nb, V* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
  }
}

// out has na + nb - 1 slots, zero-initialized; accumulates a*b into it.
template <class R, class V>
void karatsuba(const R& ring, const V* a, std::size_t na, const V* b, std::size_t nb, V* out) {
  if (na < karatsuba_threshold || nb < karatsuba_threshold) {
    schoolbook(ring, a, na, b, nb, out);
    return;
  }
  std::size_t h = std::min(na, nb) / 2;
  // a = a0 + x^h a1, b = b0 + x^h b1
  std::size_t na1 = na - h, nb1 = nb - h;
  std::vector<V> z0(2 * h - 1), z2(na1 + nb1 - 1);
  karatsuba(ring, a, h, b, h, z0.data());
  karatsuba(ring, a + h, na1, b + h, nb1, z2.data());
  std::vector<V> sa(std::max(h, na1)), sb(std::max(h, nb1));
  for (std::size_t i = 0; i < sa.size(); ++i) {
    V x = i < h ? a[i] : V{};
    sa[i] = i < na1 ? ring.add(x, a[h + i]) : x;
  }
  for (std::size_t i = 0; i < sb.size(); ++i) {
    V x = i < h ? b[i] : V{};
    sb[i] = i < nb1 ? ring.add(x, b[h + i]) : x;
  }
  std::vector<V> z1(sa.size() + sb.size() - 1);
  karatsuba(ring, sa.data(), sa.size(), sb.data(), sb.size(), z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = ring.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = ring.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = ring.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] = ring.add(out[h + i], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = ring.add(out[2 * h + i], z2[i]);
}

}  // namespace detail

template <CoefficientRing R>
Poly<R> mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename R::value_type> out(a.size() + b.size() - 1);
  detail::karatsuba(ring, a.coeffs().data(), a.size(), b.coeffs().data(), b.size(), out.data());
  return Poly<R>(std::move(out));
}

template <CoefficientRing R>
Poly<R> derivative(const R& ring, const Poly<R>& a) {
  if (a.size() <= 1) return {};
  std::vector<typename R::value_type> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = ring.mul(ring.from_int(static_cast<std::int64_t>(i)), a[i]);
  return Poly<R>(std::move(out));
}

template <CoefficientRing R>
typename R::value_type eval(const R& ring, const Poly<R>& a, const typename R::value_type& x) {
  typename R::value_type acc = ring.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), a[i]);
  return acc;
}

// a(b(x)) by Horner.
template <CoefficientRing R>
Poly<R> compose(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> acc;
  for (std::size_t i = a.size(); i-- > 0;) acc = add(ring, mul(ring, acc, b), Poly<R>::constant(a[i]));
  return acc;
}

template <CoefficientRing R>
bool is_monic(const R& ring, const Poly<R>& b) {
  return !b.is_zero() && ring.is_zero(ring.sub(b.lc(), ring.one()));
}

// Division by a monic polynomial; works over any coefficient ring.
template <CoefficientRing R>
std::pair<Poly<R>, Poly<R>> divrem_monic(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (!is_monic(ring, b)) throw DomainError("divrem_monic: divisor is zero or not monic");
  if (a.degree() < b.degree()) return {Poly<R>{}, a};
  std::vector<typename R::value_type> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<typename R::value_type> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    typename R::value_type c = r[k + db];
    q[k] = c;
    if (ring.is_zero(c)) continue;
    for (std::size_t j = 0; j < db; ++j) r[k + j] = ring.sub(r[k + j], ring.mul(c, b[j]));
    r[k + db] = ring.zero();
  }
  r.resize(db);
  return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

template <CoefficientRing R>
Poly<R> rem_monic(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return divrem_monic(ring, a, b).second;
}

template <CoefficientField F>
Poly<F> make_monic(const F& field, const Poly<F>& a) {
  if (a.is_zero()) return a;
  return scale(field, a, field.inv(a.lc()));
}

template <CoefficientField F>
std::pair<Poly<F>, Poly<F>> divrem(const F& field, const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  auto inv = field.inv(b.lc());
  auto [q, r] = divrem_monic(field, a, scale(field, b, inv));
  return {scale(field, q, inv), std::move(r)};
}

template <CoefficientField F>
Poly<F> rem(const F& field, const Poly<F>& a, const Poly<F>& b) {
  return divrem(field, a, b).second;
}

// Monic gcd; gcd(0, 0) = 0.
template <CoefficientField F>
Poly<F> gcd(const F& field, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = rem(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(field, a);
}

// Returns (g, s, t) with s*a + t*b = g, g monic (or zero when a = b = 0).
template <CoefficientField F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const F& field, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(field.one()), s1;
  Poly<F> t0, t1 = Poly<F>::constant(field.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(field, r0, r1);
    Poly<F> s2 = sub(field, s0, mul(field, q, s1));
    Poly<F> t2 = sub(field, t0, mul(field, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = field.inv(r0.lc());
  return {scale(field, r0, inv), scale(field, s0, inv), scale(field, t0, inv)};
}

// base^e mod m for monic m.
template <CoefficientRing R>
Poly<R> pow_mod(const R& ring, const Poly<R>& base, const Integer& e, const Poly<R>& m) {
  Poly<R> result = rem_monic(ring, Poly<R>::constant(ring.one()), m);
  Poly<R> b = rem_monic(ring, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem_monic(ring, mul(ring, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem_monic(ring, mul(ring, result, b), m);
  }
  return result;
}

template <class D, class C, class Fn>
DensePoly<D> map_coeffs(const DensePoly<C>& a, Fn&& fn) {
  std::vector<D> out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.push_back(fn(c));
  return DensePoly<D>(std::move(out));
}

}  // namespace poly

using ZPoly = DensePoly<Integer>;
using QPoly = DensePoly<Rational>;
using FpPoly = DensePoly<u64>;

}  // namespace subfields
