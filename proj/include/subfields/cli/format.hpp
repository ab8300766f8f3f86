#pragma once

#include <string>
#include <vector>

#include "subfields/numfield/number_field.hpp"

namespace subfields::cli {

namespace format_detail {

inline std::string monomial(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace format_detail

// "x^6 - 2", "-1/2*a^2 + a", "0"
inline std::string format_qpoly(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    Rational a = abs(c);
    std::string mono = format_detail::monomial(var, k);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

inline std::string format_zpoly(const ZPoly& p, const std::string& var = "x") {
  return format_qpoly(zpoly::to_q(p), var);
}

inline std::string format_element(const NFElement& e, const std::string& var = "a") {
  return format_qpoly(e.rep, var);
}

// Polynomial over K in x with coefficients written in a.
inline std::string format_kpoly(const KPoly& p, const std::string& x = "x", const std::string& a = "a") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const NFElement& c = p[k];
    if (c.rep.is_zero()) continue;
    std::string mono = format_detail::monomial(x, k);
    if (c.rep.degree() == 0) {
      const Rational& q = c.rep[0];
      const bool neg = sgn(q) < 0;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      Rational m = abs(q);
      if (mono.empty())
        out += m.get_str();
      else if (m == 1)
        out += mono;
      else
        out += m.get_str() + "*" + mono;
      continue;
    }
    std::string body = format_element(c, a);
    int terms = 0;
    for (const auto& q : c.rep.coeffs()) terms += sgn(q) != 0;
    const bool neg = terms == 1 && body[0] == '-';
    if (neg) body.erase(0, 1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string coeff = terms == 1 ? body : "(" + body + ")";
    out += mono.empty() ? coeff : coeff + "*" + mono;
  }
  return out;
}

// Power-basis coordinates as strings, padded to the field degree.
inline std::vector<std::string> element_coords(const NumberField& K, const NFElement& e) {
  std::vector<std::string> out;
  for (const auto& q : K.coordinates(e)) out.push_back(q.get_str());
  return out;
}

}  // namespace subfields::cli
