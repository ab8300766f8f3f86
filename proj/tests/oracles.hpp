#pragma once

// Slow, independent reference computations used by the test suites. None of
// these call the modular machinery they are used to check.

#include <map>
#include <ostream>
#include <type_traits>
#include <numeric>
#include <set>
#include <vector>

#include "subfields/subfields.hpp"

namespace oracle {

using namespace subfields;

inline ZPoly zp(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

// x^n - 1 divided by Phi_d for every proper divisor d.
// n/d in lowest terms; mpq_class does not reduce on construction.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline ZPoly cyclotomic(int n) {
  RationalField Q;
  QPoly acc = poly::sub(Q, QPoly::monomial(Rational(1), n), QPoly{Rational(1)});
  for (int d = 1; d < n; ++d)
    if (n % d == 0) acc = poly::divrem(Q, acc, zpoly::to_q(cyclotomic(d))).first;
  return zpoly::clear_denominators(acc).first;
}

// Number of subgroups of (Z/n)^*: nonempty subsets of units closed under
// multiplication.
inline int unit_subgroup_count(int n) {
  std::vector<int> units;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) units.push_back(a);
  if (n <= 2) units = {1};
  const std::size_t k = units.size();
  int count = 0;
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    auto in = [&](int a) {
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i & 1) && units[i] == a) return true;
      return false;
    };
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i)
      for (std::size_t j = 0; j < k && closed; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) closed = in(units[i] * units[j] % n);
    count += closed;
  }
  return count;
}

// Blocks of the union of the two partitions' overlap graph, by depth-first
// search over index adjacency.
inline std::vector<std::size_t> components_join(const PartitionVec& p, const PartitionVec& q) {
  const std::size_t r = p.size();
  std::vector<std::vector<std::size_t>> adj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && (p.rep(i) == p.rep(j) || q.rep(i) == q.rep(j))) adj[i].push_back(j);
  std::vector<std::size_t> comp(r, r);
  for (std::size_t s = 0; s < r; ++s) {
    if (comp[s] != r) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto w : adj[u])
        if (comp[w] == r) {
          comp[w] = s;
          stack.push_back(w);
        }
    }
  }
  return comp;
}

using QMatrix = std::vector<std::vector<Rational>>;

inline QMatrix canonical_rows(QMatrix m, std::size_t cols) {
  linalg::rref(RationalField{}, m, cols);
  return m;
}

// Subfields of K as Q-subspaces: L_i = {h : h(x) = h(alpha) mod f_i} is the
// kernel of a linear map on coordinates; subfields are intersections of
// such kernels. Each subfield is keyed by the canonical row space of its
// constraints and reported by its canonical basis.
inline std::set<QMatrix> vector_space_lattice(const SubfieldFactorization& sf) {
  const NumberField& K = sf.field;
  const std::size_t n = static_cast<std::size_t>(K.degree());
  RationalField Q;
  std::vector<QMatrix> constraints;
  for (const auto& fi : sf.factors) {
    // Column b: rem(x^b, f_i) - alpha^b, flattened.
    const std::size_t d = static_cast<std::size_t>(fi.degree());
    QMatrix rows(d * n, std::vector<Rational>(n));
    for (std::size_t b = 0; b < n; ++b) {
      KPoly xb = KPoly::monomial(K.one(), b);
      NFElement ab = K.reduce(QPoly::monomial(Rational(1), b));
      // Plain long division over K, independent of the modular code.
      KPoly rem = poly::rem(K, xb, fi);
      rem = poly::sub(K, rem, KPoly::constant(ab));
      for (std::size_t x = 0; x < rem.size(); ++x)
        for (std::size_t c = 0; c < rem[x].rep.size(); ++c) rows[x * n + c][b] = rem[x].rep[c];
    }
    constraints.push_back(canonical_rows(rows, n));
  }
  std::set<QMatrix> keys(constraints.begin(), constraints.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<QMatrix> cur(keys.begin(), keys.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        QMatrix m = cur[a];
        m.insert(m.end(), cur[b].begin(), cur[b].end());
        if (keys.insert(canonical_rows(m, n)).second) grew = true;
      }
  }
  std::set<QMatrix> spaces;
  for (const auto& c : keys) spaces.insert(canonical_rows(linalg::nullspace(Q, c, n), n));
  return spaces;
}

// Canonical basis of the Q-algebra generated by gens inside K.
inline QMatrix algebra_span(const NumberField& K, const std::vector<NFElement>& gens) {
  const std::size_t n = static_cast<std::size_t>(K.degree());
  std::vector<NFElement> elems{K.one()};
  QMatrix span = canonical_rows({K.coordinates(K.one())}, n);
  auto add = [&](const NFElement& e) {
    QMatrix t = span;
    t.push_back(K.coordinates(e));
    t = canonical_rows(t, n);
    if (t.size() > span.size()) {
      span = t;
      elems.push_back(e);
    }
  };
  for (const auto& g : gens) add(g);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) add(K.mul(elems[k], g));
  return span;
}

// Monic gcd over K by the textbook Euclidean algorithm.
inline KPoly euclid_gcd(const NumberField& K, const KPoly& a, const KPoly& b) { return poly::gcd(K, a, b); }

// The product of all factors, compared coefficient by coefficient.
inline KPoly product(const NumberField& K, const std::vector<KPoly>& fs) {
  KPoly acc{K.one()};
  for (const auto& h : fs) acc = poly::mul(K, acc, h);
  return acc;
}

// Resultant from the Sylvester determinant, over Q.
inline Rational sylvester_resultant(const QPoly& a, const QPoly& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree()), k = static_cast<std::size_t>(b.degree());
  const std::size_t N = m + k;
  QMatrix s(N, std::vector<Rational>(N));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= k; ++j) s[k + i][i + j] = b[k - j];
  Rational det = 1;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && s[piv][c] == 0) ++piv;
    if (piv == N) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (std::size_t i = c + 1; i < N; ++i) {
      Rational f = s[i][c] / s[c][c];
      for (std::size_t j = c; j < N; ++j) s[i][j] -= f * s[c][j];
    }
  }
  return det;
}

// Named fields used across suites.
struct Named {
  const char* name;
  ZPoly f;
};

inline std::vector<Named> acceptance_fields() {
  return {{"x^3-2", zp({-2, 0, 0, 1})},
          {"x^4+1", zp({1, 0, 0, 0, 1})},
          {"x^6-2", zp({-2, 0, 0, 0, 0, 0, 1})},
          {"x^4-2", zp({-2, 0, 0, 0, 1})},
          {"Phi7", cyclotomic(7)},
          {"Phi9", cyclotomic(9)},
          {"Phi16", cyclotomic(16)},
          {"Phi20", cyclotomic(20)}};
}

}  // namespace oracle

// Readable gtest failure output.
namespace subfields {

inline void PrintTo(const PartitionVec& p, std::ostream* os) { *os << p.to_string(); }

inline void PrintTo(const NFElement& e, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < e.rep.size(); ++i) *os << (i ? ", " : "") << e.rep[i].get_str();
  *os << "]";
}

template <class C>
void PrintTo(const DensePoly<C>& p, std::ostream* os) {
  *os << "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    *os << (i ? ", " : "");
    if constexpr (std::is_same_v<C, NFElement>)
      PrintTo(p[i], os);
    else if constexpr (std::is_same_v<C, Rational> || std::is_same_v<C, Integer>)
      *os << p[i].get_str();
    else
      *os << p[i];
  }
  *os << "}";
}

}  // namespace subfields
