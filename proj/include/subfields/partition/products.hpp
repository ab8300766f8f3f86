#pragma once

#include <vector>

#include "subfields/factor/subfield_factorization.hpp"
#include "subfields/partition/partition.hpp"

namespace subfields {

// Expanded product of the factors f_j, j in part (0-based indices).
inline KPoly p_product(const SubfieldFactorization& sf, const std::vector<std::size_t>& part) {
  if (part.empty()) throw DomainError("p_product: empty part");
  KPoly acc{sf.field.one()};
  for (auto j : part) {
    if (j >= sf.r()) throw DomainError("p_product: index out of range");
    acc = poly::mul(sf.field, acc, sf.factors[j]);
  }
  return acc;
}

}  // namespace subfields
