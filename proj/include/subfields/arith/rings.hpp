#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "subfields/arith/integer.hpp"

namespace subfields {

// A coefficient ring is a context object: it owns whatever modulus the
// elements need and supplies the arithmetic. Elements are plain values whose
// value-initialized state is the ring's zero.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, std::int64_t k) {
  typename R::value_type;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_int(k) } -> std::same_as<typename R::value_type>;
  { r.add(a, a) } -> std::same_as<typename R::value_type>;
  { r.sub(a, a) } -> std::same_as<typename R::value_type>;
  { r.neg(a) } -> std::same_as<typename R::value_type>;
  { r.mul(a, a) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
};

template <class R>
concept CoefficientField = CoefficientRing<R> && requires(const R& r, const typename R::value_type& a) {
  { r.inv(a) } -> std::same_as<typename R::value_type>;
};

struct IntegerRing {
  using value_type = Integer;
  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  Integer from_int(std::int64_t k) const { return Integer(static_cast<long>(k)); }
  Integer add(const Integer& a, const Integer& b) const { return a + b; }
  Integer sub(const Integer& a, const Integer& b) const { return a - b; }
  Integer neg(const Integer& a) const { return -a; }
  Integer mul(const Integer& a, const Integer& b) const { return a * b; }
  bool is_zero(const Integer& a) const { return sgn(a) == 0; }
};

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(std::int64_t k) const { return Rational(static_cast<long>(k)); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
  Rational inv(const Rational& a) const {
    if (sgn(a) == 0) throw DomainError("division by zero in Q");
    return 1 / a;
  }
};

// F_p with p < 2^62, elements are residues in [0, p).
class PrimeField {
 public:
  using value_type = u64;

  explicit PrimeField(u64 p) : p_(p) {
    if (p < 2 || p >= (u64{1} << 62)) throw DomainError("prime out of range: " + std::to_string(p));
  }

  u64 modulus() const { return p_; }
  u64 zero() const { return 0; }
  u64 one() const { return 1; }
  u64 from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  u64 from_integer(const Integer& a) const { return mod_word(a, p_); }
  u64 from_rational(const Rational& a) const { return mod_word(a, p_); }
  u64 add(u64 a, u64 b) const { return word::add(a, b, p_); }
  u64 sub(u64 a, u64 b) const { return word::sub(a, b, p_); }
  u64 neg(u64 a) const { return word::neg(a, p_); }
  u64 mul(u64 a, u64 b) const { return word::mul(a, b, p_); }
  bool is_zero(u64 a) const { return a == 0; }
  u64 inv(u64 a) const {
    auto r = word::inv(a, p_);
    if (!r) throw DomainError("division by zero in F_" + std::to_string(p_));
    return *r;
  }
  u64 pow(u64 a, u64 e) const { return word::pow(a, e, p_); }
  // Representative in (-p/2, p/2].
  std::int64_t symmetric(u64 a) const {
    return a > p_ / 2 ? -static_cast<std::int64_t>(p_ - a) : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  u64 p_;
};

}  // namespace subfields
