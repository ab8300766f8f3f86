#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "subfields/arith/linalg.hpp"
#include "subfields/factor/subfield_factorization.hpp"
#include "subfields/modgcd/modgcd.hpp"
#include "subfields/partition/partition.hpp"

namespace subfields {

// Homogeneous equations over F_p in the unknowns e_1..e_r. Rows accumulate
// across rounds.
struct LinearSystemModP {
  u64 p = 0;
  std::size_t cols = 0;
  std::vector<std::vector<u64>> rows;
};

// {0,1}-vectors with disjoint supports covering every index.
struct EchelonBasis {
  std::vector<std::vector<u64>> rows;

  PartitionVec partition() const {
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& row : rows) {
      parts.emplace_back();
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] == 1) parts.back().push_back(j);
    }
    return PartitionVec::from_parts(rows.empty() ? 0 : rows[0].size(), parts);
  }
};

namespace principal_detail {

// (F_p[t]/fbar)[x] images of all factors.
inline std::vector<QRPoly> reduce_factors(const SubfieldFactorization& sf, const GoodPrime& gp) {
  std::vector<QRPoly> out;
  for (const auto& h : sf.factors) out.push_back(reduce_mod(h, gp));
  return out;
}

// Constant polynomial in (F_p[t]/fbar)[x] taking the coefficients of e as
// the coefficients of x; that is, e(alpha) with alpha replaced by x.
inline QRPoly as_x_poly(const FpPoly& e) {
  std::vector<FpPoly> c;
  for (std::size_t b = 0; b < e.size(); ++b) c.push_back(FpPoly::constant(e[b]));
  return QRPoly(std::move(c));
}

inline std::mt19937_64 stream(std::uint64_t seed, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace principal_detail

// One round: pick c in F_p, let h_j = f_j'(c) / f_j(c) in F_p[t]/(fbar), and
// return the n * deg(f_i) coefficient equations of
//   sum_j e_j (rem(h_j(x), f_i) - h_j(t)) = 0.
inline std::vector<std::vector<u64>> equations_mod_p(const SubfieldFactorization& sf, std::size_t i,
                                                     const GoodPrime& gp, std::mt19937_64& rng) {
  const std::size_t r = sf.r();
  const std::size_t n = static_cast<std::size_t>(sf.field.degree());
  if (i >= r) throw DomainError("equations_mod_p: index out of range");
  QuotientRing R = gp.ring();
  auto fbar = principal_detail::reduce_factors(sf, gp);
  const QRPoly& fi = fbar[i];
  const std::size_t di = static_cast<std::size_t>(fi.degree());

  std::vector<FpPoly> h(r);
  bool ok = false;
  for (u64 attempt = 0; attempt < gp.p && !ok; ++attempt) {
    FpPoly c = FpPoly::constant(rng() % gp.p);
    ok = true;
    for (std::size_t j = 0; j < r && ok; ++j) {
      auto inv = R.inv(poly::eval(R, fbar[j], c));
      if (!inv) {
        ok = false;
        break;
      }
      h[j] = R.mul(poly::eval(R, poly::derivative(R, fbar[j]), c), *inv);
    }
  }
  if (!ok) throw BadPrime("equations_mod_p: every point is a zero divisor");

  std::vector<std::vector<u64>> rows(n * di, std::vector<u64>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    QRPoly form = poly::rem_monic(R, principal_detail::as_x_poly(h[j]), fi);
    form = poly::sub(R, form, QRPoly::constant(h[j]));
    for (std::size_t x = 0; x < form.size(); ++x)
      for (std::size_t b = 0; b < form[x].size(); ++b) rows[x * n + b][j] = form[x][b];
  }
  return rows;
}

// Reduced echelon basis of the solution space, if it is a {0,1}-echelon
// basis; nullopt means more equations are needed.
inline std::optional<EchelonBasis> extract_echelon_basis(const LinearSystemModP& sys) {
  PrimeField F(sys.p);
  auto basis = linalg::nullspace(F, sys.rows, sys.cols);
  std::vector<u64> sum(sys.cols, 0);
  for (const auto& row : basis)
    for (std::size_t j = 0; j < sys.cols; ++j) {
      if (row[j] > 1) return std::nullopt;
      sum[j] += row[j];
    }
  for (auto s : sum)
    if (s != 1) return std::nullopt;
  return EchelonBasis{std::move(basis)};
}

// Checks modulo q that every product over a part of the candidate has all
// its coefficients in the principal subfield of f_i, i.e. each coefficient
// h(t) satisfies rem(h(y), f_i(y)) = h(t). Success certifies the candidate.
inline bool verify_partition(const SubfieldFactorization& sf, std::size_t i, const PartitionVec& candidate,
                             const GoodPrime& q) {
  if (candidate.size() != sf.r()) throw DomainError("verify_partition: partition size differs from r");
  QuotientRing R = q.ring();
  auto fbar = principal_detail::reduce_factors(sf, q);
  for (const auto& part : candidate.parts()) {
    QRPoly g{R.one()};
    for (auto j : part) g = poly::mul(R, g, fbar[j]);
    for (const auto& coeff : g.coeffs()) {
      QRPoly lhs = poly::rem_monic(R, principal_detail::as_x_poly(coeff), fbar[i]);
      if (!(lhs == QRPoly::constant(coeff))) return false;
    }
  }
  return true;
}

struct PrincipalResult {
  PartitionVec partition;
  int rounds = 0;
};

// Equations rounds modulo gp (appended, one random point each) until the
// solution space has a {0,1}-echelon basis whose partition passes the check
// modulo q.
inline PrincipalResult principal_partition(const SubfieldFactorization& sf, std::size_t i, const GoodPrime& gp,
                                           const GoodPrime& q, std::uint64_t seed, int max_rounds = 32) {
  if (gp.p == q.p) throw DomainError("principal_partition: equation and check primes must differ");
  auto rng = principal_detail::stream(seed, i);
  LinearSystemModP sys{gp.p, sf.r(), {}};
  for (int round = 1; round <= max_rounds; ++round) {
    for (auto& row : equations_mod_p(sf, i, gp, rng)) sys.rows.push_back(std::move(row));
    // Keep the system small: only independent rows matter.
    linalg::rref(PrimeField(gp.p), sys.rows, sys.cols);
    auto basis = extract_echelon_basis(sys);
    if (!basis) continue;
    PartitionVec cand = basis->partition();
    if (verify_partition(sf, i, cand, q)) return {cand, round};
  }
  throw InternalDefect("principal partition for index " + std::to_string(i + 1) + " not certified within " +
                       std::to_string(max_rounds) + " rounds");
}

// Exact version over Q: 2n rational points 1, 2, ... (skipping roots of the
// factors), rational linear algebra, no certification needed.
inline PartitionVec slow_equations_over_Q(const SubfieldFactorization& sf, std::size_t i) {
  const NumberField& K = sf.field;
  const std::size_t r = sf.r();
  const std::size_t n = static_cast<std::size_t>(K.degree());
  if (i >= r) throw DomainError("slow_equations_over_Q: index out of range");
  RationalField Q;
  const KPoly& fi = sf.factors[i];
  const std::size_t di = static_cast<std::size_t>(fi.degree());
  linalg::Matrix<RationalField> rows;
  std::size_t used = 0;
  for (long c = 1; used < 2 * n; ++c) {
    NFElement pt = K.from_int(c);
    std::vector<NFElement> vals(r);
    bool root = false;
    for (std::size_t j = 0; j < r && !root; ++j) {
      vals[j] = poly::eval(K, sf.factors[j], pt);
      root = K.is_zero(vals[j]);
    }
    if (root) continue;
    ++used;
    std::vector<std::vector<Rational>> block(n * di, std::vector<Rational>(r));
    for (std::size_t j = 0; j < r; ++j) {
      NFElement h = K.mul(poly::eval(K, poly::derivative(K, sf.factors[j]), pt), K.inv(vals[j]));
      KPoly form = poly::sub(K, kpoly_rem(K, kpoly_from_q(h.rep), fi), KPoly::constant(h));
      for (std::size_t x = 0; x < form.size(); ++x)
        for (std::size_t b = 0; b < form[x].rep.size(); ++b) block[x * n + b][j] = form[x].rep[b];
    }
    for (auto& row : block) rows.push_back(std::move(row));
    linalg::rref(Q, rows, r);
  }
  auto basis = linalg::nullspace(Q, rows, r);
  std::vector<std::vector<std::size_t>> parts;
  for (const auto& row : basis) {
    parts.emplace_back();
    for (std::size_t j = 0; j < r; ++j) {
      if (row[j] == 1)
        parts.back().push_back(j);
      else if (row[j] != 0)
        throw InternalDefect("rational solution basis is not a {0,1}-basis");
    }
  }
  return PartitionVec::from_parts(r, parts);
}

}  // namespace subfields
