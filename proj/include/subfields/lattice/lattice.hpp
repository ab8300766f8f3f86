#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "subfields/arith/linalg.hpp"
#include "subfields/modgcd/modgcd.hpp"
#include "subfields/partition/products.hpp"
#include "subfields/principal/principal.hpp"

namespace subfields {

struct SubfieldRecord {
  PartitionVec partition;
  int degree = 0;                            // [L : Q]
  std::vector<std::size_t> subfield_poly_part;  // first part, 0-based
  std::vector<NFElement> generators;
  std::optional<std::size_t> principal_index;  // smallest i with P_i = partition
};

struct LatticeTimings {
  double factorization = 0;
  double principal = 0;
  double joins = 0;
  double generators = 0;
  double total = 0;
};

struct LatticeOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::optional<u64> prime;  // equation prime
  bool generators = false;
};

struct Lattice {
  SubfieldFactorization sf;
  GoodPrime prime;        // equations (and generator membership tests)
  GoodPrime check_prime;  // certification of principal partitions
  std::vector<PrincipalResult> principal;
  std::vector<SubfieldRecord> records;   // sorted by (degree, partition)
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (child, parent), child a proper subfield
  LatticeTimings timings;

  const NumberField& field() const { return sf.field; }
};

namespace lattice_detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Default equation primes start here; large enough that random points
// rarely produce spurious solutions.
inline constexpr u64 equation_prime_base = u64{1} << 30;

// A good prime modulo which every factor reduces (no denominator vanishes).
inline std::optional<GoodPrime> usable_prime(const SubfieldFactorization& sf, u64 p) {
  auto gp = make_good_prime(sf.field, p);
  if (!gp) return std::nullopt;
  try {
    for (const auto& h : sf.factors) (void)reduce_mod(h, *gp);
  } catch (const BadPrime&) {
    return std::nullopt;
  }
  return gp;
}

inline GoodPrime next_usable_prime(const SubfieldFactorization& sf, u64 after) {
  for (u64 p = word::next_prime(after);; p = word::next_prime(p))
    if (auto gp = usable_prime(sf, p)) return *gp;
}

// Membership test modulo p: false proves beta is not in the principal
// subfield of f_j.
inline bool maybe_in_principal(const QuotientRing& R, const FpPoly& beta, const QRPoly& fj) {
  return poly::rem_monic(R, principal_detail::as_x_poly(beta), fj) == QRPoly::constant(beta);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  // Report the lowest failing index so the error does not depend on timing.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lattice_detail

inline KPoly subfield_polynomial(const SubfieldRecord& rec, const SubfieldFactorization& sf) {
  return p_product(sf, rec.subfield_poly_part);
}

// Closure of the principal partitions under join. Each principal partition
// P is joined with every member present when P is processed.
inline std::vector<PartitionVec> join_closure(const std::vector<PartitionVec>& principal) {
  std::vector<PartitionVec> s;
  std::set<PartitionVec> seen;
  for (const auto& p : principal)
    if (seen.insert(p).second) s.push_back(p);
  const std::size_t base = s.size();
  for (std::size_t a = 0; a < base; ++a) {
    const std::size_t snapshot = s.size();
    for (std::size_t k = 0; k < snapshot; ++k) {
      if (k == a) continue;
      PartitionVec j = join(s[a], s[k]);
      if (seen.insert(j).second) s.push_back(std::move(j));
    }
  }
  return s;
}

// Transitive reduction of inclusion, where L is contained in L' iff P_L'
// refines P_L.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<SubfieldRecord>& records) {
  const std::size_t m = records.size();
  auto below = [&](std::size_t a, std::size_t b) {
    return a != b && refines(records[b].partition, records[a].partition);
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < m && covered; ++c)
        if (below(a, c) && below(c, b)) covered = false;
      if (covered) edges.emplace_back(a, b);
    }
  return edges;
}

// Elements generating the subfield of rec. Candidates are the trailing
// coefficient of g, the coefficient of x^(deg g - 1), then g(1), g(2), ...;
// each is kept if it is shown (mod p) to lie outside some principal subfield
// L_j not containing L. After `budget` candidates the coefficients of g are
// used instead.
inline std::vector<NFElement> generators(const SubfieldRecord& rec, const SubfieldFactorization& sf,
                                         const std::vector<PartitionVec>& principal, const GoodPrime& gp,
                                         int budget = 8) {
  const NumberField& K = sf.field;
  std::vector<std::size_t> J;
  for (std::size_t j = 0; j < principal.size(); ++j)
    if (!refines(principal[j], rec.partition)) J.push_back(j);
  if (J.empty()) return {};

  QuotientRing R = gp.ring();
  auto fbar = principal_detail::reduce_factors(sf, gp);
  const auto& part = rec.subfield_poly_part;
  auto candidate = [&](int k) {
    NFElement acc = K.one();
    if (k == 0) {
      for (auto j : part) acc = K.mul(acc, sf.factors[j].coeff(0));
    } else if (k == 1) {
      acc = K.zero();
      for (auto j : part) acc = K.add(acc, sf.factors[j].coeff(sf.factors[j].size() - 2));
    } else {
      NFElement c = K.from_int(k - 1);
      for (auto j : part) acc = K.mul(acc, poly::eval(K, sf.factors[j], c));
    }
    return acc;
  };

  std::vector<NFElement> out;
  for (int k = 0; k < budget && !J.empty(); ++k) {
    NFElement beta = candidate(k);
    if (K.is_rational(beta)) continue;
    FpPoly img;
    try {
      img = reduce_mod(beta, gp);
    } catch (const BadPrime&) {
      continue;
    }
    std::vector<std::size_t> keep;
    for (auto j : J)
      if (lattice_detail::maybe_in_principal(R, img, fbar[j])) keep.push_back(j);
    if (keep.size() == J.size()) continue;
    J = std::move(keep);
    out.push_back(std::move(beta));
  }
  if (J.empty()) return out;

  out.clear();
  const KPoly g = subfield_polynomial(rec, sf);
  for (const auto& c : g.coeffs())
    if (!K.is_rational(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

inline Lattice all_subfields(const NumberField& K, const LatticeOptions& opt = {}) {
  using namespace lattice_detail;
  const auto t_start = Clock::now();
  Lattice lat{subfield_factorization(K), {}, {}, {}, {}, {}, {}};
  lat.timings.factorization = seconds_since(t_start);
  const auto& sf = lat.sf;
  const std::size_t r = sf.r();
  const int n = K.degree();

  if (opt.prime) {
    auto gp = usable_prime(sf, *opt.prime);
    if (!gp) throw InvalidArgument("prime " + std::to_string(*opt.prime) + " is not a good prime for this field");
    lat.prime = *gp;
  } else {
    lat.prime = next_usable_prime(sf, std::max<u64>(equation_prime_base, 2 * static_cast<u64>(n)));
  }
  lat.check_prime = next_usable_prime(sf, std::max(lat.prime.p, equation_prime_base));

  auto t1 = Clock::now();
  lat.principal.resize(r);
  parallel_for(r, opt.threads, [&](std::size_t i) {
    lat.principal[i] = principal_partition(sf, i, lat.prime, lat.check_prime, opt.seed);
  });
  lat.timings.principal = seconds_since(t1);

  auto t2 = Clock::now();
  std::vector<PartitionVec> principal;
  for (const auto& pr : lat.principal) principal.push_back(pr.partition);
  std::vector<PartitionVec> closure = join_closure(principal);
  lat.timings.joins = seconds_since(t2);

  for (auto& p : closure) {
    SubfieldRecord rec;
    rec.subfield_poly_part = p.first_part();
    int dg = 0;
    for (auto j : rec.subfield_poly_part) dg += sf.factors[j].degree();
    if (n % dg != 0) throw InternalDefect("subfield polynomial degree does not divide n");
    rec.degree = n / dg;
    for (std::size_t i = 0; i < r && !rec.principal_index; ++i)
      if (principal[i] == p) rec.principal_index = i;
    rec.partition = std::move(p);
    lat.records.push_back(std::move(rec));
  }
  std::sort(lat.records.begin(), lat.records.end(), [](const SubfieldRecord& a, const SubfieldRecord& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.partition < b.partition;
  });
  lat.edges = hasse_edges(lat.records);

  if (opt.generators) {
    auto t3 = Clock::now();
    parallel_for(lat.records.size(), opt.threads, [&](std::size_t k) {
      lat.records[k].generators = generators(lat.records[k], sf, principal, lat.prime);
    });
    lat.timings.generators = seconds_since(t3);
  }
  lat.timings.total = seconds_since(t_start);
  return lat;
}

struct VerifyReport {
  bool divides = false;       // (x - alpha) | g | f
  bool dimension = false;     // dim of Q-algebra generated by coeffs(g) is n / deg g
  bool generator_gcd = false; // gcd over generators h of gcd(f, h(x) - h(alpha)) is g
  std::string detail;

  bool ok() const { return divides && dimension && generator_gcd; }
};

namespace lattice_detail {

// Dimension over Q of the algebra generated by gens inside K.
inline std::size_t algebra_dimension(const NumberField& K, const std::vector<NFElement>& gens) {
  const std::size_t n = static_cast<std::size_t>(K.degree());
  RationalField Q;
  linalg::Matrix<RationalField> span;
  std::vector<NFElement> basis;
  auto try_add = [&](const NFElement& e) {
    auto trial = span;
    trial.push_back(K.coordinates(e));
    linalg::rref(Q, trial, n);
    if (trial.size() == span.size()) return;
    span = std::move(trial);
    basis.push_back(e);
  };
  try_add(K.one());
  for (const auto& g : gens) try_add(g);
  for (std::size_t k = 0; k < basis.size() && basis.size() < n; ++k)
    for (const auto& g : gens) try_add(K.mul(basis[k], g));
  return basis.size();
}

}  // namespace lattice_detail

// Exact checks of a record against its defining properties. Uses the
// record's generators, computing them when absent.
inline VerifyReport verify_record(const Lattice& lat, const SubfieldRecord& rec) {
  const auto& sf = lat.sf;
  const NumberField& K = sf.field;
  const int n = K.degree();
  VerifyReport rep;
  KPoly g = subfield_polynomial(rec, sf);
  KPoly f = min_poly_over_K(K);
  rep.divides = kpoly_rem(K, g, kpoly_linear(K, K.alpha())).is_zero() && kpoly_rem(K, f, g).is_zero();
  if (!rep.divides) rep.detail += "subfield polynomial is not between x - alpha and f; ";

  std::vector<NFElement> coeffs(g.coeffs().begin(), g.coeffs().end());
  const std::size_t dim = lattice_detail::algebra_dimension(K, coeffs);
  rep.dimension = static_cast<int>(dim) * g.degree() == n && static_cast<int>(dim) == rec.degree;
  if (!rep.dimension) rep.detail += "algebra dimension " + std::to_string(dim) + " does not match; ";

  std::vector<NFElement> gens = rec.generators;
  if (gens.empty()) {
    std::vector<PartitionVec> principal;
    for (const auto& pr : lat.principal) principal.push_back(pr.partition);
    gens = generators(rec, sf, principal, lat.prime);
  }
  KPoly acc = f;
  for (const auto& h : gens) acc = modular_gcd(K, acc, kpoly_minus_value(K, h));
  rep.generator_gcd = acc == g;
  if (!rep.generator_gcd) rep.detail += "gcd over generators differs from subfield polynomial; ";
  return rep;
}

}  // namespace subfields
