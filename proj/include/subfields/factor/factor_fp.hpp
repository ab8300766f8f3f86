#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "subfields/arith/poly.hpp"

namespace subfields {

struct FpFactor {
  FpPoly factor;  // monic irreducible
  int multiplicity;
};

namespace fp {

inline FpPoly x_poly() { return FpPoly{0, 1}; }

inline bool is_one(const FpPoly& a) { return a.degree() == 0 && a[0] == 1; }

// a(x) = b(x^p) -> b(x); Frobenius is the identity on F_p.
inline FpPoly pth_root(const FpPoly& a, u64 p) {
  std::vector<u64> out(a.size() == 0 ? 0 : (a.size() - 1) / p + 1);
  for (std::size_t i = 0; i < a.size(); i += p) out[i / p] = a[i];
  return FpPoly(std::move(out));
}

inline bool canonical_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
}

// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with
// a = prod s_i^i and each s_i squarefree (over F_p this needs p-th roots).
inline std::vector<FpFactor> squarefree_decomposition(const PrimeField& f, const FpPoly& a) {
  std::vector<FpFactor> out;
  if (a.degree() < 1) return out;
  const u64 p = f.modulus();
  auto add = [&](const FpPoly& g, int mult) {
    if (g.degree() >= 1) out.push_back({g, mult});
  };
  struct Frame {
    FpPoly poly;
    int scale;
  };
  std::vector<Frame> stack{{poly::make_monic(f, a), 1}};
  while (!stack.empty()) {
    auto [g, scale] = std::move(stack.back());
    stack.pop_back();
    FpPoly d = poly::derivative(f, g);
    if (d.is_zero()) {
      stack.push_back({pth_root(g, p), scale * static_cast<int>(p)});
      continue;
    }
    FpPoly c = poly::gcd(f, g, d);
    FpPoly w = poly::divrem(f, g, c).first;
    int i = 1;
    while (!is_one(w)) {
      FpPoly y = poly::gcd(f, w, c);
      add(poly::divrem(f, w, y).first, i * scale);
      ++i;
      w = y;
      c = poly::divrem(f, c, y).first;
    }
    if (!is_one(c)) stack.push_back({pth_root(c, p), scale * static_cast<int>(p)});
  }
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial: pairs
// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<FpPoly, int>> distinct_degree(const PrimeField& f, FpPoly g) {
  std::vector<std::pair<FpPoly, int>> out;
  const Integer p = to_integer(f.modulus());
  FpPoly h = x_poly();
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = poly::pow_mod(f, h, p, g);
    FpPoly part = poly::gcd(f, g, poly::sub(f, h, x_poly()));
    if (part.degree() > 0) {
      out.emplace_back(part, d);
      g = poly::divrem(f, g, part).first;
      h = poly::rem(f, h, g);
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

// Splits a squarefree monic product of irreducibles of degree d
// (Cantor-Zassenhaus; trace map when p = 2).
inline std::vector<FpPoly> equal_degree(const PrimeField& f, const FpPoly& g, int d, std::mt19937_64& rng) {
  if (g.degree() == d) return {g};
  const u64 p = f.modulus();
  const int n = g.degree();
  Integer exponent = 0;
  if (p != 2) {
    Integer pd;
    mpz_pow_ui(pd.get_mpz_t(), to_integer(p).get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (pd - 1) / 2;
  }
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  for (;;) {
    std::vector<u64> r(static_cast<std::size_t>(n));
    for (auto& c : r) c = coeff(rng);
    FpPoly a(std::move(r));
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      FpPoly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = poly::rem(f, poly::mul(f, t, t), g);
        b = poly::add(f, b, t);
      }
    } else {
      b = poly::sub(f, poly::pow_mod(f, a, exponent, g), FpPoly::constant(1));
    }
    FpPoly s = poly::gcd(f, g, b);
    if (s.degree() <= 0 || s.degree() == n) continue;
    auto left = equal_degree(f, s, d, rng);
    auto right = equal_degree(f, poly::divrem(f, g, s).first, d, rng);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
}

inline std::vector<FpPoly> factor_squarefree(const PrimeField& f, const FpPoly& g, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  for (auto& [part, d] : distinct_degree(f, poly::make_monic(f, g))) {
    auto pieces = equal_degree(f, part, d, rng);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Number of irreducible factors of a squarefree polynomial (DDF only).
inline std::size_t count_factors_squarefree(const PrimeField& f, const FpPoly& g) {
  std::size_t k = 0;
  for (auto& [part, d] : distinct_degree(f, poly::make_monic(f, g))) k += static_cast<std::size_t>(part.degree() / d);
  return k;
}

inline bool is_squarefree(const PrimeField& f, const FpPoly& g) {
  if (g.degree() < 1) return true;
  return poly::gcd(f, g, poly::derivative(f, g)).degree() == 0;
}

}  // namespace fp

// Complete factorization of nonzero g over F_p into monic irreducibles with
// multiplicities; the leading coefficient of g is the leftover unit.
// Deterministic: the splitting RNG is seeded from the input.
inline std::vector<FpFactor> factor_mod_p(const PrimeField& f, const FpPoly& g) {
  if (g.is_zero()) throw DomainError("factor_mod_p: zero polynomial");
  std::mt19937_64 rng(0x5eed ^ f.modulus() ^ (static_cast<u64>(g.degree()) << 32));
  std::vector<FpFactor> out;
  for (auto& [s, mult] : fp::squarefree_decomposition(f, g)) {
    for (auto& irr : fp::factor_squarefree(f, s, rng)) out.push_back({irr, mult});
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return fp::canonical_less(a.factor, b.factor);
  });
  return out;
}

}  // namespace subfields
