#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hhsl2/matrix.hpp"

namespace hhsl2 {

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right, so results are reproducible.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the null space, one vector per free column in increasing order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Basis of the column space (the pivot columns of m).
std::vector<Vector> image_basis(const Matrix& m);

/// Some x with m x = b, free variables set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// dim(ker A / im B). Requires A B = 0; throws std::invalid_argument otherwise.
std::size_t subquotient_dim(const Matrix& kernel_of, const Matrix& image_of);

/// Basis of ker (M - lambda I)^n for the n x n matrix M.
std::vector<Vector> generalized_eigenspace(const Matrix& m, Scalar lambda);

/// Extend a basis of `sub` (assumed contained in span(`space`)) by vectors of
/// `space`; returns the added vectors.
std::vector<Vector> complement_in(const PrimeField& field, std::size_t ambient,
                                  const std::vector<Vector>& sub, const std::vector<Vector>& space);

bool in_span(const PrimeField& field, std::size_t ambient, const std::vector<Vector>& basis,
             const Vector& v);

}  // namespace hhsl2
