#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <json.hpp>

#include "subfields/arith/poly.hpp"
#include "subfields/errors.hpp"

namespace subfields::cli {

namespace parse_detail {

// Guards against inputs like x^1000000000 before the degree guard can run.
inline constexpr long max_exponent = 1 << 16;

// expr   := term (('+' | '-') term)*
// term   := unary (['*'] unary)*        juxtaposition multiplies
// unary  := ('+' | '-') unary | power
// power  := atom ['^' digits]
// atom   := digits | 'x' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ZPoly parse() {
    ZPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  IntegerRing Z;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '(';
  }

  ZPoly expr() {
    ZPoly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      ZPoly rhs = term();
      acc = c == '+' ? poly::add(Z, acc, rhs) : poly::sub(Z, acc, rhs);
    }
    return acc;
  }

  ZPoly term() {
    ZPoly acc = unary();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = poly::mul(Z, acc, unary());
      } else if (starts_atom()) {
        acc = poly::mul(Z, acc, unary());
      } else {
        return acc;
      }
      check_size(acc);
    }
  }

  ZPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return poly::neg(Z, unary());
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  ZPoly power() {
    ZPoly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    Integer e(std::string(s_.substr(start, pos_ - start)));
    if (e > max_exponent) fail("exponent too large");
    long k = e.get_si();
    if (base.degree() > 0 && static_cast<long>(base.degree()) * k > max_exponent) fail("degree too large");
    ZPoly acc{Integer(1)};
    for (long i = 0; i < k; ++i) acc = poly::mul(Z, acc, base);
    return acc;
  }

  ZPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ZPoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return ZPoly{Integer(0), Integer(1)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ZPoly::constant(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void check_size(const ZPoly& p) const {
    if (p.degree() > max_exponent) fail("degree too large");
  }
};

inline Integer json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(v.dump());
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw ParseError("coefficient is not an integer: " + v.dump());
    return z;
  }
  throw ParseError("coefficient is not an integer: " + v.dump());
}

}  // namespace parse_detail

// An integer polynomial in x, either as an expression such as
// "x^6 - 2" or "(x+1)^2 - 3x", or as JSON {"coeffs": [c0, ..., cn]}
// listing coefficients from the constant term up (integers or digit strings).
inline ZPoly parse_polynomial(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input");
  if (text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
      throw ParseError("JSON input must be an object with a \"coeffs\" array");
    std::vector<Integer> c;
    for (const auto& v : doc["coeffs"]) c.push_back(parse_detail::json_integer(v));
    return ZPoly(std::move(c));
  }
  return parse_detail::Parser(text).parse();
}

}  // namespace subfields::cli
