#include "pdclass/linalg.hpp"

#include <utility>

namespace pdclass {

namespace {

// Reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce(RationalMatrix& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < columns && next_row < rows.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next_row]);
    const Rational lead = rows[next_row][col];
    for (auto& x : rows[next_row]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        rows[r][c] -= factor * rows[next_row][c];
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(RationalMatrix rows, std::size_t columns) {
  return reduce(rows, columns).size();
}

std::vector<RationalVector> nullspace_basis(RationalMatrix rows, std::size_t columns) {
  const auto pivots = reduce(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free_col = 0; free_col < columns; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(columns, Rational(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -rows[k][free_col];
    }
    auto ints = primitive_integer_vector(v);
    for (const auto& x : ints) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto& y : ints) y = -y;
      }
      break;
    }
    basis.push_back(to_rational(ints));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace pdclass
