#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leviform/gauss_rational.hpp"
#include "leviform/poly.hpp"

namespace leviform {

using Matrix = std::vector<std::vector<GaussRational>>;

Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// Reduced row echelon form over Q(i).
struct RowEchelon {
  Matrix rows;                      // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

/// p composed with the linear change z -> A z, i.e. z_i is replaced by
/// sum_j A[i][j] z_j. Throws InvalidArgument when A is not square of size
/// p.nvars() or is singular.
Poly substitute_linear(const Poly& p, const Matrix& a);

}  // namespace leviform
