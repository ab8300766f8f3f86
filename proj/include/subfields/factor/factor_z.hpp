#pragma once

#include <algorithm>
#include <vector>

#include "subfields/arith/zpoly.hpp"
#include "subfields/factor/factor_fp.hpp"
#include "subfields/factor/hensel.hpp"

namespace subfields {

namespace zfactor_detail {

struct PrimeChoice {
  u64 p = 0;
  std::size_t count = 0;
};

// Among the first few admissible primes, the one giving the fewest modular
// factors (fewer factors means a cheaper recombination).
inline PrimeChoice choose_prime(const ZPoly& f, int candidates = 6) {
  PrimeChoice best;
  int seen = 0;
  for (u64 p = 3; seen < candidates; p = word::next_prime(p)) {
    if (mod_word(f.lc(), p) == 0) continue;
    PrimeField fp(p);
    FpPoly fbar = zpoly::reduce(f, p);
    if (!fp::is_squarefree(fp, fbar)) continue;
    ++seen;
    std::size_t c = fp::count_factors_squarefree(fp, fbar);
    if (best.p == 0 || c < best.count) best = {p, c};
    if (c == 1) break;
  }
  return best;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline bool less_zpoly(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace zfactor_detail

// Irreducible factors over Q of a squarefree primitive g of degree >= 1,
// by Zassenhaus: factor modulo a small prime, Hensel lift past the
// Mignotte-type bound, recombine subsets by increasing cardinality.
// Factors are primitive with positive leading coefficient, sorted by degree.
inline std::vector<ZPoly> factor_over_Z(const ZPoly& g) {
  using namespace zfactor_detail;
  if (g.degree() < 1) throw DomainError("factor_over_Z: degree must be >= 1");
  ZPoly f = zpoly::primitive_part(g);
  std::vector<ZPoly> result;
  if (sgn(f[0]) == 0) {
    result.push_back(ZPoly{0, 1});
    f = ZPoly(std::vector<Integer>(f.coeffs().begin() + 1, f.coeffs().end()));
    if (sgn(f[0]) == 0) throw DomainError("factor_over_Z: input is not squarefree");
  }
  if (f.degree() == 1) {
    result.push_back(f);
  } else if (f.degree() > 1) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    auto choice = choose_prime(f);
    if (choice.count == 1) {
      result.push_back(f);
    } else {
      PrimeField field(choice.p);
      const Integer p = to_integer(choice.p);
      Integer b = f.lc();
      Integer B = isqrt_ceil(Integer(static_cast<unsigned long>(n + 1))) * zpoly::max_abs(f) * b;
      mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), n);
      unsigned l = 1;
      Integer pl = p;
      while (pl <= 2 * B) {
        pl *= p;
        ++l;
      }
      std::vector<FpPoly> modular;
      for (auto& fac : factor_mod_p(field, zpoly::reduce(f, choice.p))) modular.push_back(fac.factor);
      // monic target b^{-1} f mod p^l
      Integer binv;
      mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), pl.get_mpz_t());
      ZPoly target = zpoly::mod(poly::scale(IntegerRing{}, f, binv), pl);
      std::vector<ZPoly> lifted = hensel_lift(target, modular, field, l);

      std::vector<std::size_t> T(lifted.size());
      for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
      ZPoly rest = f;
      std::size_t s = 1;
      while (2 * s <= T.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
          // Constant term of b * (subset product) must divide b * rest(0).
          Integer t = b;
          for (auto i : idx) t = symmetric_mod(Integer(t * lifted[T[i]][0]), pl);
          if (sgn(t) == 0 || !mpz_divisible_p(Integer(b * rest[0]).get_mpz_t(), t.get_mpz_t())) continue;
          // Same for the next-to-leading coefficient, which must obey the bound.
          Integer sub = 0;
          for (auto i : idx) sub += lifted[T[i]][lifted[T[i]].size() - 2];
          if (abs(symmetric_mod(Integer(b * sub), pl)) > B) continue;
          ZPoly gs = ZPoly{b};
          for (auto i : idx) gs = zpoly::mul_mod(gs, lifted[T[i]], pl);
          gs = zpoly::symmetric(gs, pl);
          const Integer gnorm = zpoly::norm1(gs);
          if (gnorm > B) continue;
          std::vector<bool> in(T.size(), false);
          for (auto i : idx) in[i] = true;
          ZPoly hs = ZPoly{b};
          for (std::size_t i = 0; i < T.size(); ++i)
            if (!in[i]) hs = zpoly::mul_mod(hs, lifted[T[i]], pl);
          hs = zpoly::symmetric(hs, pl);
          if (gnorm * zpoly::norm1(hs) <= B) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < T.size(); ++i)
              if (!in[i]) keep.push_back(T[i]);
            T = std::move(keep);
            result.push_back(zpoly::primitive_part(gs));
            rest = zpoly::primitive_part(hs);
            b = rest.lc();
            found = true;
            break;
          }
        } while (next_combination(idx, T.size()));
        if (!found) ++s;
      }
      result.push_back(rest);
    }
  }
  std::sort(result.begin(), result.end(), less_zpoly);
  return result;
}

namespace zfactor_detail {

inline QPoly q_gcd(const QPoly& a, const QPoly& b) { return poly::gcd(RationalField{}, a, b); }

}  // namespace zfactor_detail

struct ZFactor {
  ZPoly factor;
  int multiplicity;
};

// General entry point: content removal and squarefree decomposition (Yun,
// over Q) followed by Zassenhaus on each squarefree part.
inline std::vector<ZFactor> factor_integer_poly(const ZPoly& g) {
  if (g.degree() < 1) return {};
  RationalField Q;
  QPoly a = zpoly::to_q(zpoly::primitive_part(g));
  QPoly d = poly::derivative(Q, a);
  QPoly c = zfactor_detail::q_gcd(a, d);
  QPoly w = poly::divrem(Q, a, c).first;
  QPoly y = poly::divrem(Q, d, c).first;
  std::vector<ZFactor> out;
  int i = 1;
  while (w.degree() >= 1) {
    QPoly z = poly::sub(Q, y, poly::derivative(Q, w));
    QPoly h = zfactor_detail::q_gcd(w, z);
    if (h.degree() >= 1) {
      auto part = zpoly::clear_denominators(h).first;
      for (auto& irr : factor_over_Z(part)) out.push_back({irr, i});
    }
    w = poly::divrem(Q, w, h).first;
    y = poly::divrem(Q, z, h).first;
    ++i;
  }
  return out;
}

// True when g (degree >= 1) is irreducible over Q.
inline bool is_irreducible_over_Q(const ZPoly& g) {
  if (g.degree() < 1) return false;
  auto fs = factor_integer_poly(g);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace subfields
