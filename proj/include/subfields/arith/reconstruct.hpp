#pragma once

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "subfields/arith/integer.hpp"

namespace subfields {

struct Residue {
  Integer value;
  u64 prime;
};

// Combines x = value (mod modulus) with x = r (mod p) into the representative
// in [0, modulus * p). p must be coprime to modulus.
inline Integer crt_step(const Integer& value, const Integer& modulus, u64 r, u64 p) {
  u64 vm = mod_word(value, p);
  u64 mm = mod_word(modulus, p);
  auto inv = word::inv(mm, p);
  if (!inv) throw DomainError("crt: moduli are not coprime");
  u64 k = word::mul(word::sub(r % p, vm, p), *inv, p);
  return value + modulus * to_integer(k);
}

// Unique x in [0, P) with x = r_i (mod p_i), P the product of the primes.
inline std::pair<Integer, Integer> crt_combine(std::span<const Residue> residues) {
  std::set<u64> seen;
  Integer value = 0, modulus = 1;
  for (const auto& [r, p] : residues) {
    if (!seen.insert(p).second) throw DomainError("crt: duplicate prime " + std::to_string(p));
    value = crt_step(value, modulus, mod_word(r, p), p);
    modulus *= to_integer(p);
  }
  return {value, modulus};
}

// Finds a/b with |a| <= bound, 0 < b <= bound and a = b * residue (mod m).
// Requires m > 2 * bound^2, which makes the answer unique when it exists.
inline std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& m, const Integer& bound) {
  if (m <= 2 * bound * bound) throw DomainError("rational_reconstruct: modulus too small for bound");
  Integer r0 = m, r1;
  mpz_fdiv_r(r1.get_mpz_t(), residue.get_mpz_t(), m.get_mpz_t());
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Integer a = r1, b = t1;
  if (sgn(b) < 0) {
    a = -a;
    b = -b;
  }
  if (sgn(b) == 0 || b > bound || abs(a) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// Largest bound usable with modulus m: floor(sqrt((m - 1) / 2)).
inline Integer reconstruction_bound(const Integer& m) {
  Integer h = (m - 1) / 2, r;
  mpz_sqrt(r.get_mpz_t(), h.get_mpz_t());
  return r;
}

// Coefficient-wise CRT accumulator used by the multimodular algorithms.
class CrtAccumulator {
 public:
  void reset() {
    values_.clear();
    modulus_ = 1;
  }

  void add(std::span<const u64> residues, u64 p) {
    if (modulus_ == 1) values_.assign(residues.size(), Integer(0));
    if (values_.size() != residues.size()) throw DomainError("crt: image size changed");
    for (std::size_t i = 0; i < residues.size(); ++i) values_[i] = crt_step(values_[i], modulus_, residues[i], p);
    modulus_ *= to_integer(p);
  }

  const Integer& modulus() const { return modulus_; }
  const std::vector<Integer>& values() const { return values_; }
  bool empty() const { return modulus_ == 1; }

  // Rational reconstruction of every entry with the given bound.
  std::optional<std::vector<Rational>> rationals(const Integer& bound) const {
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
      auto q = rational_reconstruct(v, modulus_, bound);
      if (!q) return std::nullopt;
      out.push_back(*q);
    }
    return out;
  }

  std::vector<Integer> symmetric() const {
    std::vector<Integer> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(symmetric_mod(v, modulus_));
    return out;
  }

 private:
  std::vector<Integer> values_;
  Integer modulus_ = 1;
};

}  // namespace subfields
