#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "conifold/scalar.hpp"

namespace conifold {

inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Rank by exact Gaussian elimination over a field.
template <class K>
int exact_rank(Matrix<K> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero_value(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (is_zero_value(m[r][col])) continue;
      K factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace conifold
