#include "hhsl2/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hhsl2 {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1 % field.characteristic());
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.reduce(rows[i][j]));
  }
  return m;
}

Matrix Matrix::from_columns(PrimeField field, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("Matrix::from_columns: bad length");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

void Matrix::require_same_shape(const Matrix& rhs, const char* op) const {
  if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + op);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(field_ == rhs.field_) || cols_ != rhs.rows_)
    throw std::invalid_argument("Matrix: shape mismatch in operator*");
  const std::uint64_t p = field_.characteristic();
  Matrix out(field_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      const Scalar* row = &rhs.data_[k * rhs.cols_];
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * row[j]) % p;
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.data_[i * rhs.cols_ + j] = static_cast<Scalar>(acc[j]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_shape(rhs, "operator+");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_shape(rhs, "operator-");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Matrix Matrix::pow(unsigned e) const {
  if (!is_square()) throw std::invalid_argument("Matrix::pow: not square");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
  const std::uint64_t p = field_.characteristic();
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t(data_[i * cols_ + j]) * v[j]) % p;
    out[i] = static_cast<Scalar>(acc);
  }
  return out;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix out(field_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out.set(i, j, (*this)(row_idx[i], col_idx[j]));
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("kronecker: field mismatch");
  const auto& F = a.field();
  Matrix out(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, F.mul(x, b(k, l)));
    }
  return out;
}

}  // namespace hhsl2
