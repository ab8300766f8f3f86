#pragma once

#include <algorithm>
#include <vector>

#include "subfields/arith/reconstruct.hpp"
#include "subfields/factor/factor_z.hpp"
#include "subfields/modgcd/modgcd.hpp"
#include "subfields/numfield/number_field.hpp"

namespace subfields {

// Res(a, b) = lc(a)^deg(b) * prod over roots r of a of b(r), over a field.
template <CoefficientField F>
typename F::value_type resultant(const F& field, poly::Poly<F> a, poly::Poly<F> b) {
  using V = typename F::value_type;
  if (a.is_zero() || b.is_zero()) return field.zero();
  V acc = field.one();
  auto power = [&](V base, int e) {
    V r = field.one();
    for (int i = 0; i < e; ++i) r = field.mul(r, base);
    return r;
  };
  for (;;) {
    if (a.degree() == 0) return field.mul(acc, power(a.lc(), b.degree()));
    if (b.degree() == 0) return field.mul(acc, power(b.lc(), a.degree()));
    poly::Poly<F> r = poly::rem(field, a, b);
    if (r.is_zero()) return field.zero();
    // Res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) Res(b, r)
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) acc = field.neg(acc);
    acc = field.mul(acc, power(b.lc(), a.degree() - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

namespace trager_detail {

// Newton interpolation through (xs[k], ys[k]) over F_p.
inline FpPoly interpolate(const PrimeField& F, const std::vector<u64>& xs, std::vector<u64> c) {
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t k = m - 1; k >= j; --k)
      c[k] = F.mul(F.sub(c[k], c[k - 1]), F.inv(F.sub(xs[k], xs[k - j])));
  FpPoly acc;
  for (std::size_t k = m; k-- > 0;) {
    acc = poly::mul(F, acc, FpPoly{F.neg(xs[k]), 1});
    acc = poly::add(F, acc, FpPoly::constant(c[k]));
  }
  return acc;
}

}  // namespace trager_detail

// Norm of g(x - s*alpha) from K down to Q, i.e. Res_y(f(y), G(x, y)) with
// G(x, y) = sum_j g_j(y) (x - s y)^j, computed by evaluation/interpolation
// modulo word primes and CRT. Returned primitive with positive leading
// coefficient.
inline ZPoly norm_of_shift(const NumberField& K, const KPoly& g, long s) {
  if (g.is_zero()) throw DomainError("norm_of_shift: zero polynomial");
  const std::size_t n = static_cast<std::size_t>(K.degree());
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  // Clear denominators across all coefficients g_j(y).
  Integer D = 1;
  for (const auto& c : g.coeffs())
    for (const auto& q : c.rep.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_den_mpz_t());
  std::vector<ZPoly> G(dg + 1);
  for (std::size_t j = 0; j <= dg; ++j)
    G[j] = poly::map_coeffs<Integer>(g[j].rep, [&](const Rational& q) { return Integer(q.get_num() * (D / q.get_den())); });

  // Every conjugate satisfies |alpha_i| <= R (Cauchy). Each factor
  // G(x, alpha_i) has coefficient 1-norm at most S, so S^n bounds the norm.
  Integer R = zpoly::max_abs(ZPoly(std::vector<Integer>(K.min_poly().coeffs().begin(), K.min_poly().coeffs().end() - 1))) + 1;
  Integer S = 0, shift_pow = 1;
  const Integer shift_base = 1 + Integer(std::abs(s)) * R;
  for (std::size_t j = 0; j <= dg; ++j) {
    Integer at_r = 0, rp = 1;
    for (const auto& c : G[j].coeffs()) {
      at_r += abs(c) * rp;
      rp *= R;
    }
    S += at_r * shift_pow;
    shift_pow *= shift_base;
  }
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), S.get_mpz_t(), n);
  const Integer hard = 2 * bound;

  const std::size_t deg_n = n * dg;
  std::vector<u64> xs(deg_n + 1);
  for (std::size_t k = 0; k <= deg_n; ++k) xs[k] = k;

  CrtAccumulator acc;
  for (u64 p = word::next_prime(large_prime_base); acc.modulus() <= hard; p = word::next_prime(p)) {
    PrimeField F(p);
    FpPoly fbar = zpoly::reduce(K.min_poly(), p);
    std::vector<FpPoly> Gp(dg + 1);
    for (std::size_t j = 0; j <= dg; ++j) Gp[j] = zpoly::reduce(G[j], p);
    const u64 sp = F.from_int(s);
    std::vector<u64> ys(deg_n + 1);
    for (std::size_t k = 0; k <= deg_n; ++k) {
      // G(x_k, y) mod fbar by Horner in the x-degree.
      FpPoly lin{xs[k] % p, F.neg(sp)};
      FpPoly h;
      for (std::size_t j = dg + 1; j-- > 0;) h = poly::rem_monic(F, poly::add(F, poly::mul(F, h, lin), Gp[j]), fbar);
      ys[k] = resultant(F, fbar, h);
    }
    FpPoly img = trager_detail::interpolate(F, xs, ys);
    std::vector<u64> flat(deg_n + 1, 0);
    for (std::size_t i = 0; i < img.size(); ++i) flat[i] = img[i];
    acc.add(flat, p);
  }
  return zpoly::primitive_part(ZPoly(acc.symmetric()));
}

// Squarefreeness over Q, certified by a squarefree image modulo a prime not
// dividing the leading coefficient. Reports false after a few failed primes.
inline bool is_squarefree_over_Q(const ZPoly& N, int attempts = 3) {
  if (N.degree() < 1) return true;
  u64 p = large_prime_base;
  for (int i = 0; i < attempts;) {
    p = word::next_prime(p);
    if (mod_word(N.lc(), p) == 0) continue;
    ++i;
    if (fp::is_squarefree(PrimeField(p), zpoly::reduce(N, p))) return true;
  }
  return false;
}

// h(x + c) over K, for h with rational coefficients.
inline KPoly taylor_shift(const NumberField& K, const ZPoly& h, const NFElement& c) {
  KPoly lin(std::vector<NFElement>{c, K.one()});
  KPoly acc;
  for (std::size_t i = h.size(); i-- > 0;)
    acc = poly::add(K, poly::mul(K, acc, lin), KPoly::constant(K.from_rational(Rational(h[i]))));
  return acc;
}

// Shift sequence 0, 1, -1, 2, -2, ...
inline long trager_shift(std::size_t attempt) {
  long k = static_cast<long>((attempt + 1) / 2);
  return attempt % 2 == 1 ? k : -k;
}

// Irreducible factors over K of a monic squarefree g: find s with a
// squarefree norm N(x) = Norm(g(x - s alpha)), factor N over Q, and pull each
// rational factor N_j back as gcd(g(x), N_j(x + s alpha)).
inline std::vector<KPoly> trager_factor_over_K(const NumberField& K, const KPoly& g, std::size_t max_shifts = 64) {
  if (!poly::is_monic(K, g)) throw DomainError("trager_factor_over_K: input must be monic");
  if (g.degree() <= 1) return {g};
  const int n = K.degree();
  for (std::size_t attempt = 0; attempt < max_shifts; ++attempt) {
    const long s = trager_shift(attempt);
    ZPoly N = norm_of_shift(K, g, s);
    if (!is_squarefree_over_Q(N)) continue;
    auto rational_factors = factor_over_Z(N);
    if (rational_factors.size() == 1) return {g};
    NFElement shift = K.mul(K.from_int(s), K.alpha());
    std::vector<KPoly> out;
    for (const auto& Nj : rational_factors) {
      KPoly back = taylor_shift(K, Nj, shift);
      out.push_back(modular_gcd(K, g, back, Nj.degree() / n));
    }
    return out;
  }
  throw InternalDefect("trager_factor_over_K: no shift gave a squarefree norm");
}

}  // namespace subfields
