#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hhsl2/field.hpp"

namespace hhsl2 {

using Vector = std::vector<Scalar>;

/// Dense matrix over F_p, row-major.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);
  /// Columns must all have length `rows`.
  static Matrix from_columns(PrimeField field, std::size_t rows, std::span<const Vector> columns);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = v; }
  void add_to(std::size_t r, std::size_t c, Scalar v) {
    auto& x = data_[r * cols_ + c];
    x = field_.add(x, v);
  }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Scalar s) const;
  Matrix pow(unsigned e) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Vector column(std::size_t c) const;

  /// Rows/cols selected by index lists, in the order given.
  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const;

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace hhsl2
