#include "hhsl2/linalg.hpp"

#include <stdexcept>

namespace hhsl2 {

Echelon row_reduce(Matrix m) {
  const PrimeField F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = col; j < m.cols(); ++j) {
        const Scalar t = m(row, j);
        m.set(row, j, m(piv, j));
        m.set(piv, j, t);
      }
    const Scalar inv = F.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.set(row, j, F.mul(m(row, j), inv));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Scalar factor = m(r, col);
      if (!factor) continue;
      for (std::size_t j = col; j < m.cols(); ++j)
        m.set(r, j, F.sub(m(r, j), F.mul(factor, m(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const PrimeField F = m.field();
  const Echelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) v[ech.pivot_cols[r]] = F.neg(ech.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const Matrix& m) {
  std::vector<Vector> basis;
  for (auto c : row_reduce(m).pivot_cols) basis.push_back(m.column(c));
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  const Echelon ech = row_reduce(std::move(aug));
  Vector x(m.cols(), 0);
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    const std::size_t c = ech.pivot_cols[r];
    if (c == m.cols()) return std::nullopt;
    x[c] = ech.reduced(r, m.cols());
  }
  return x;
}

std::size_t subquotient_dim(const Matrix& kernel_of, const Matrix& image_of) {
  if (kernel_of.cols() != image_of.rows())
    throw std::invalid_argument("subquotient_dim: incompatible shapes");
  if (!(kernel_of * image_of).is_zero())
    throw std::invalid_argument("subquotient_dim: image is not contained in kernel (A*B != 0)");
  return kernel_of.cols() - rank(kernel_of) - rank(image_of);
}

std::vector<Vector> generalized_eigenspace(const Matrix& m, Scalar lambda) {
  if (!m.is_square()) throw std::invalid_argument("generalized_eigenspace: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const Matrix shifted = m - Matrix::identity(m.field(), n).scaled(lambda);
  return kernel_basis(shifted.pow(static_cast<unsigned>(n)));
}

std::vector<Vector> complement_in(const PrimeField& field, std::size_t ambient,
                                  const std::vector<Vector>& sub, const std::vector<Vector>& space) {
  std::vector<Vector> current = sub;
  std::size_t r = current.empty() ? 0 : rank(Matrix::from_columns(field, ambient, current));
  std::vector<Vector> added;
  for (const auto& v : space) {
    current.push_back(v);
    const std::size_t r2 = rank(Matrix::from_columns(field, ambient, current));
    if (r2 > r) {
      r = r2;
      added.push_back(v);
    } else {
      current.pop_back();
    }
  }
  return added;
}

bool in_span(const PrimeField& field, std::size_t ambient, const std::vector<Vector>& basis,
             const Vector& v) {
  bool zero = true;
  for (auto x : v) zero = zero && x == 0;
  if (zero) return true;
  if (basis.empty()) return false;
  return solve(Matrix::from_columns(field, ambient, basis), v).has_value();
}

}  // namespace hhsl2
