#pragma once

#include <cstddef>

#include "pdclass/rational.hpp"

namespace pdclass {

/// Exact Gaussian elimination helpers over the rationals. Matrices are
/// row-major; every row must have `columns` entries.
std::size_t matrix_rank(RationalMatrix rows, std::size_t columns);

/// Basis of {z : row . z = 0 for every row}. Each basis vector is scaled to
/// coprime integers with its first nonzero entry positive.
std::vector<RationalVector> nullspace_basis(RationalMatrix rows, std::size_t columns);

Rational determinant(RationalMatrix square);

}  // namespace pdclass
