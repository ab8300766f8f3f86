#pragma once

#include <cstddef>
#include <vector>

#include "subfields/arith/rings.hpp"

namespace subfields::linalg {

template <class F>
using Matrix = std::vector<std::vector<typename F::value_type>>;

// In-place reduced row echelon form; returns the pivot columns. Rows are
// assumed to share one length `cols`. Zero rows are dropped.
template <CoefficientField F>
std::vector<std::size_t> rref(const F& field, Matrix<F>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && field.is_zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    auto inv = field.inv(m[row][c]);
    for (std::size_t j = c; j < cols; ++j) m[row][j] = field.mul(m[row][j], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || field.is_zero(m[i][c])) continue;
      auto factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(factor, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {x : m x = 0}, returned as the rows of a matrix in reduced row
// echelon form (the unique reduced echelon basis of the solution space).
template <CoefficientField F>
Matrix<F> nullspace(const F& field, Matrix<F> m, std::size_t cols) {
  auto pivots = rref(field, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  rref(field, basis, cols);
  return basis;
}

}  // namespace subfields::linalg
