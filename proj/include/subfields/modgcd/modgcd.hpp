#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <vector>

#include "subfields/arith/quotient_ring.hpp"
#include "subfields/arith/reconstruct.hpp"
#include "subfields/numfield/good_prime.hpp"
#include "subfields/numfield/number_field.hpp"

namespace subfields {

// Coefficient bound B for f'(alpha) * c over all coefficients c of monic
// factors of f.
struct GcdBound {
  Integer bound;
};

// n * 4^n * ||f||_2^2
inline GcdBound gcd_bound_factor(const NumberField& K) {
  const auto n = static_cast<unsigned long>(K.degree());
  Integer b = zpoly::norm2_squared(K.min_poly()) * n;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), 2 * n);
  return {b};
}

// n^7.5 * T * 2^(n+1) * ||f||^3 * (1 + ||f||)^n for monic factors of the
// cofactor polynomial H built from a T-bounded combination. Square roots are
// rounded up, so the value is an upper bound.
inline GcdBound gcd_bound_cofactor(const NumberField& K, const Integer& t_bound) {
  const auto n = static_cast<unsigned long>(K.degree());
  Integer norm = isqrt_ceil(zpoly::norm2_squared(K.min_poly()));
  Integer n7, tail;
  mpz_pow_ui(n7.get_mpz_t(), Integer(n).get_mpz_t(), 7);
  mpz_pow_ui(tail.get_mpz_t(), Integer(norm + 1).get_mpz_t(), n);
  Integer b = n7 * isqrt_ceil(Integer(n)) * t_bound * norm * norm * norm * tail;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), n + 1);
  return {b};
}

using QRPoly = DensePoly<FpPoly>;

// Monic gcd over (F_p[t]/fbar)[x]; nullopt when a leading coefficient is a
// zero divisor (the prime is then unusable for this input).
inline std::optional<QRPoly> qr_gcd(const QuotientRing& R, QRPoly a, QRPoly b) {
  auto monic = [&](const QRPoly& v) -> std::optional<QRPoly> {
    auto inv = R.inv(v.lc());
    if (!inv) return std::nullopt;
    return poly::scale(R, v, *inv);
  };
  while (!b.is_zero()) {
    auto bm = monic(b);
    if (!bm) return std::nullopt;
    QRPoly r = poly::rem_monic(R, a, *bm);
    a = std::move(*bm);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return monic(a);
}

namespace modgcd_detail {

// Primes for reconstruction until the product exceeds 2 B^2.
inline std::size_t analytic_prime_count(const Integer& B) {
  Integer target = 2 * B * B;
  std::size_t bits = mpz_sizeinbase(target.get_mpz_t(), 2);
  return bits / 61 + 1;
}

struct Options {
  // Accept the candidate once the product of primes passes the hard bound,
  // without calling verify.
  std::function<bool(int image_degree)> trust_at_bound;
  std::function<bool(const KPoly&)> verify;
};

// Reconstructs a monic factor g of f from images of g modulo good primes.
// image(gp) returns the monic image, or nullopt to skip the prime. Images
// of degree above the minimum seen are discarded as unlucky.
inline KPoly reconstruct_factor(const NumberField& K, const std::function<std::optional<QRPoly>(const GoodPrime&)>& image,
                                const Options& opt) {
  const Integer B = gcd_bound_factor(K).bound;
  const Integer hard = 2 * B * B;
  const std::size_t n = static_cast<std::size_t>(K.degree());
  const std::size_t cap = 4 * analytic_prime_count(B) + 8;
  const NFElement fprime_inv = K.inv(K.derivative_at_alpha());
  const QPoly fprime = poly::derivative(RationalField{}, K.min_poly_q());

  CrtAccumulator acc;
  int min_deg = INT_MAX;
  std::optional<KPoly> prev;
  u64 after = large_prime_base;
  for (std::size_t used = 0; used < cap; ++used) {
    GoodPrime gp = next_good_prime(K, after);
    after = gp.p;
    std::optional<QRPoly> img;
    try {
      img = image(gp);
    } catch (const BadPrime&) {
      continue;
    }
    if (!img) continue;
    const int d = img->degree();
    if (d > min_deg) continue;
    // The image of the true monic target divides every image, so a monic
    // constant image settles the answer.
    if (d == 0) return KPoly{K.one()};
    if (d < min_deg) {
      acc.reset();
      prev.reset();
      min_deg = d;
    }
    QuotientRing R = gp.ring();
    FpPoly fp_img = R.reduce(zpoly::reduce(fprime, gp.p));
    std::vector<u64> flat(static_cast<std::size_t>(d + 1) * n, 0);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(d); ++k) {
      FpPoly c = R.mul(fp_img, (*img)[k]);
      for (std::size_t b = 0; b < c.size(); ++b) flat[k * n + b] = c[b];
    }
    acc.add(flat, gp.p);
    const bool at_bound = acc.modulus() > hard;
    auto rats = acc.rationals(at_bound ? B : reconstruction_bound(acc.modulus()));
    if (!rats) continue;
    std::vector<NFElement> coeffs(static_cast<std::size_t>(d + 1));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(d); ++k) {
      std::vector<Rational> v(rats->begin() + static_cast<std::ptrdiff_t>(k * n),
                              rats->begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
      coeffs[k] = K.mul(NFElement{QPoly(std::move(v))}, fprime_inv);
    }
    KPoly cand(std::move(coeffs));
    if (cand.degree() != d) {
      prev = std::move(cand);
      continue;
    }
    if (at_bound && opt.trust_at_bound && opt.trust_at_bound(d)) return cand;
    if ((at_bound || (prev && *prev == cand)) && opt.verify(cand)) return cand;
    prev = std::move(cand);
  }
  throw InternalDefect("multimodular reconstruction did not stabilize within " + std::to_string(cap) + " primes");
}

inline bool divides(const NumberField& K, const KPoly& d, const KPoly& g) {
  return kpoly_rem(K, g, d).is_zero();
}

}  // namespace modgcd_detail

// Monic gcd of g1, g2 in K[x], where the gcd is known to divide f (true
// whenever one argument divides f). Images are computed over
// F_p[t]/(fbar) for word-size good primes and f'(alpha)*gcd is rebuilt by
// CRT and rational reconstruction. With known_degree, trial division is
// skipped once every retained image has that degree and the primes pass
// the analytic bound.
inline KPoly modular_gcd(const NumberField& K, const KPoly& g1, const KPoly& g2,
                         std::optional<int> known_degree = std::nullopt) {
  if (g1.is_zero() || g2.is_zero()) throw DomainError("modular_gcd: inputs must be nonzero");
  if (g1.degree() == 0 || g2.degree() == 0) return KPoly{K.one()};
  auto image = [&](const GoodPrime& gp) -> std::optional<QRPoly> {
    QuotientRing R = gp.ring();
    QRPoly a = reduce_mod(g1, gp), b = reduce_mod(g2, gp);
    if (a.degree() != g1.degree() && b.degree() != g2.degree()) return std::nullopt;
    return qr_gcd(R, std::move(a), std::move(b));
  };
  modgcd_detail::Options opt;
  opt.trust_at_bound = [&](int d) { return known_degree && *known_degree == d; };
  opt.verify = [&](const KPoly& c) { return modgcd_detail::divides(K, c, g1) && modgcd_detail::divides(K, c, g2); };
  return modgcd_detail::reconstruct_factor(K, image, opt);
}

// Quotient g / d for monic d | g, both dividing f, from quotient images
// modulo good primes followed by one exact trial multiplication.
inline KPoly kpoly_exact_divide(const NumberField& K, const KPoly& g, const KPoly& d) {
  if (!poly::is_monic(K, d) || !poly::is_monic(K, g)) throw DomainError("kpoly_exact_divide: arguments must be monic");
  if (d.degree() > g.degree()) throw DomainError("kpoly_exact_divide: not an exact divisor");
  if (d.degree() == g.degree()) {
    if (d == g) return KPoly{K.one()};
    throw DomainError("kpoly_exact_divide: not an exact divisor");
  }
  auto image = [&](const GoodPrime& gp) -> std::optional<QRPoly> {
    QuotientRing R = gp.ring();
    auto [q, r] = poly::divrem_monic(R, reduce_mod(g, gp), reduce_mod(d, gp));
    if (!r.is_zero()) throw DomainError("kpoly_exact_divide: not an exact divisor");
    return q;
  };
  modgcd_detail::Options opt;
  opt.verify = [&](const KPoly& q) { return poly::mul(K, q, d) == g; };
  try {
    return modgcd_detail::reconstruct_factor(K, image, opt);
  } catch (const InternalDefect&) {
    throw DomainError("kpoly_exact_divide: not an exact divisor");
  }
}

}  // namespace subfields
