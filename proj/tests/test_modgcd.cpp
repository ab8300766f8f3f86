#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace subfields;
using oracle::zp;

namespace {

std::vector<ZPoly> small_fields() {
  return {zp({-2, 0, 0, 1}),    zp({1, 0, 0, 0, 1}), zp({-2, 0, 0, 0, 0, 0, 1}), zp({-2, 0, 0, 0, 1}),
          oracle::cyclotomic(7), oracle::cyclotomic(9), zp({1, -1, 0, 0, 0, 1}), zp({3, 1, 0, 1})};
}

KPoly random_divisor(std::mt19937_64& rng, const NumberField& K, const std::vector<KPoly>& factors) {
  KPoly acc{K.one()};
  for (const auto& h : factors)
    if (rng() % 2) acc = poly::mul(K, acc, h);
  if (acc.degree() == 0) acc = factors[rng() % factors.size()];
  return acc;
}

// f'(a) * c has integer coordinates bounded by the coefficient bound.
void expect_integral_within_bound(const NumberField& K, const KPoly& h) {
  const Integer B = gcd_bound_factor(K).bound;
  for (const auto& c : h.coeffs()) {
    NFElement scaled = K.mul(K.derivative_at_alpha(), c);
    for (const auto& q : scaled.rep.coeffs()) {
      EXPECT_EQ(q.get_den(), 1);
      EXPECT_LE(abs(q.get_num()), B);
    }
  }
}

}  // namespace

TEST(ModularGcd, AgreesWithEuclidOnRandomDivisorPairs) {
  std::mt19937_64 rng(10);
  int pairs = 0;
  for (const auto& f : small_fields()) {
    NumberField K(f);
    auto sf = subfield_factorization(K);
    for (int k = 0; k < 25; ++k, ++pairs) {
      KPoly a = random_divisor(rng, K, sf.factors), b = random_divisor(rng, K, sf.factors);
      KPoly want = oracle::euclid_gcd(K, a, b);
      KPoly got = modular_gcd(K, a, b);
      EXPECT_EQ(got, want);
      expect_integral_within_bound(K, got);
    }
  }
  EXPECT_EQ(pairs, 200);
}

TEST(ModularGcd, KnownDegreeShortcut) {
  NumberField K(zp({-2, 0, 0, 0, 0, 0, 1}));
  auto sf = subfield_factorization(K);
  KPoly a = poly::mul(K, sf.factors[0], sf.factors[2]);
  KPoly b = poly::mul(K, sf.factors[2], sf.factors[3]);
  EXPECT_EQ(modular_gcd(K, a, b, 2), sf.factors[2]);
  EXPECT_EQ(modular_gcd(K, sf.factors[0], sf.factors[1]), KPoly{K.one()});
  EXPECT_THROW(modular_gcd(K, KPoly{}, a), DomainError);
}

TEST(ModularGcd, NonMonicSecondArgument) {
  // gcd(f, h(x) - h(a)) for h = x^2: x^2 - a^2 = (x - a)(x + a).
  NumberField K(zp({-2, 0, 0, 0, 0, 0, 1}));
  NFElement a2 = K.mul(K.alpha(), K.alpha());
  KPoly g = modular_gcd(K, min_poly_over_K(K), kpoly_minus_value(K, a2));
  EXPECT_EQ(g, KPoly(std::vector<NFElement>{K.neg(a2), K.zero(), K.one()}));
  // A scaled h changes nothing: 3 x^2 - 3 a^2.
  KPoly scaled = poly::scale(K, kpoly_minus_value(K, a2), K.from_int(3));
  EXPECT_EQ(modular_gcd(K, min_poly_over_K(K), scaled), g);
}

TEST(ModularGcd, ExactDivision) {
  NumberField K(oracle::cyclotomic(9));
  auto sf = subfield_factorization(K);
  KPoly f = min_poly_over_K(K);
  for (std::size_t j = 0; j < sf.r(); ++j) {
    KPoly q = kpoly_exact_divide(K, f, sf.factors[j]);
    EXPECT_EQ(poly::mul(K, q, sf.factors[j]), f);
    expect_integral_within_bound(K, q);
  }
  EXPECT_EQ(kpoly_exact_divide(K, f, f), KPoly{K.one()});
  KPoly notdiv = poly::add(K, sf.factors[1], KPoly{K.one()});
  EXPECT_THROW(kpoly_exact_divide(K, sf.factors[1], notdiv), DomainError);
}

TEST(ModularGcd, BoundHoldsForAllFactorizationsOfAcceptanceFields) {
  for (const auto& [name, f] : oracle::acceptance_fields()) {
    NumberField K(f);
    for (const auto& h : subfield_factorization(K).factors) expect_integral_within_bound(K, h);
  }
}

TEST(QuotientRingGcd, ZeroDivisorLeadingCoefficientIsReported) {
  PrimeField F(5);
  QuotientRing R(F, FpPoly{4, 0, 1});  // t^2 - 1, not a field
  QRPoly a(std::vector<FpPoly>{FpPoly{1}, FpPoly{4, 1}});  // (t - 1) x + 1
  QRPoly b(std::vector<FpPoly>{FpPoly{0}, FpPoly{1}, FpPoly{1}});
  EXPECT_FALSE(qr_gcd(R, b, a).has_value());
}
