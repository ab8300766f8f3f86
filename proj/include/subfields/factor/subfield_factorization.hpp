#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "subfields/factor/trager.hpp"
#include "subfields/numfield/good_prime.hpp"

namespace subfields {

// f = f_1 * ... * f_r over K with f_1 = x - alpha.
struct SubfieldFactorization {
  NumberField field;
  std::vector<KPoly> factors;
  // Roots of f in K found by composing known roots, alpha first.
  std::vector<NFElement> composition_roots;

  std::size_t r() const { return factors.size(); }
};

namespace sff_detail {

inline bool is_root(const NumberField& K, const NFElement& beta) {
  return K.is_zero(nf_eval(K, zpoly::to_q(K.min_poly()), beta));
}

using SortKey = std::vector<std::int64_t>;

// Degree, then symmetric residues of every coefficient modulo a fixed good
// prime. Distinct factors of f stay distinct modulo a good prime.
inline SortKey sort_key(const KPoly& h, const GoodPrime& gp, int n) {
  SortKey key{h.degree()};
  PrimeField F = gp.field();
  auto img = reduce_mod(h, gp);
  for (std::size_t i = 0; i < img.size(); ++i)
    for (int b = 0; b < n; ++b) key.push_back(F.symmetric(img[i].coeff(static_cast<std::size_t>(b))));
  return key;
}

}  // namespace sff_detail

// Roots are first collected cheaply: x -> +-x^k candidates, closed under
// composition h1(h2(alpha)). Their linear factors are divided out and the
// remaining cofactor is factored by the norm method. The list is ordered
// x - alpha first, then by sff_detail::sort_key.
inline SubfieldFactorization subfield_factorization(const NumberField& K) {
  using namespace sff_detail;
  const int n = K.degree();
  std::vector<NFElement> roots{K.alpha()};
  auto known = [&](const NFElement& b) { return std::find(roots.begin(), roots.end(), b) != roots.end(); };

  NFElement power = K.alpha();
  for (int k = 2; k < n + 1; ++k) {
    power = K.mul(power, K.alpha());
    for (const NFElement& cand : {power, K.neg(power)})
      if (!known(cand) && is_root(K, cand)) roots.push_back(cand);
  }
  if (!known(K.neg(K.alpha())) && is_root(K, K.neg(K.alpha()))) roots.push_back(K.neg(K.alpha()));

  // Closure: if beta1 = h1(alpha) and beta2 = h2(alpha) are roots then so is
  // h1(beta2).
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        NFElement c = nf_eval(K, roots[a].rep, roots[b]);
        if (!known(c)) {
          if (!is_root(K, c)) throw InternalDefect("composition of roots is not a root");
          roots.push_back(c);
        }
      }
    }
  }

  std::vector<KPoly> factors;
  KPoly rest = min_poly_over_K(K);
  for (const auto& beta : roots) {
    KPoly lin = kpoly_linear(K, beta);
    auto [q, r] = kpoly_divrem(K, rest, lin);
    if (!r.is_zero()) throw InternalDefect("root does not divide f");
    rest = std::move(q);
    factors.push_back(std::move(lin));
  }
  if (rest.degree() >= 1)
    for (auto& h : trager_factor_over_K(K, rest)) factors.push_back(std::move(h));

  GoodPrime gp = next_good_prime(K, std::max<u64>(2 * static_cast<u64>(n), 20));
  for (;;) {
    try {
      for (const auto& h : factors) (void)reduce_mod(h, gp);
      break;
    } catch (const BadPrime&) {
      gp = next_good_prime(K, gp.p);
    }
  }
  std::vector<std::pair<SortKey, KPoly>> keyed;
  for (std::size_t i = 1; i < factors.size(); ++i) keyed.emplace_back(sort_key(factors[i], gp, n), factors[i]);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<KPoly> ordered{factors[0]};
  for (auto& [key, h] : keyed) ordered.push_back(std::move(h));
  return SubfieldFactorization{K, std::move(ordered), std::move(roots)};
}

}  // namespace subfields
