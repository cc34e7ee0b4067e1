#include "dtqft/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dtqft {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nrows = rows.size();
  std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  Matrix m(field, nrows, ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = Scalar::from_int(field, v);
    ++r;
  }
  return m;
}

Matrix Matrix::column(std::span<const Scalar> entries) {
  Field field = entries.empty() ? Field::rationals() : entries.front().field();
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].field() != field) throw FieldMismatch("mixed fields in column vector");
    m(i, 0) = entries[i];
  }
  return m;
}

Matrix Matrix::unit_vector(Field field, std::size_t n, std::size_t index) {
  Matrix m(field, n, 1);
  m(index, 0) = Scalar::one(field);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw std::out_of_range("matrix block out of range");
  Matrix b(field_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  }
  return b;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void Matrix::require_uniform_field() const {
  for (const auto& s : data_) {
    if (s.field() != field_) {
      throw FieldMismatch("matrix over " + field_.to_string() + " holds an entry from " + s.field().to_string());
    }
  }
}

void Matrix::require_same_field(const Matrix& other, const char* op) const {
  if (field_ != other.field_) {
    throw FieldMismatch(std::string("matrix ") + op + " across fields " + field_.to_string() + " and " +
                        other.field_.to_string());
  }
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_field(other, "sum");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_field(other, "difference");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.field() != field_) throw FieldMismatch("matrix scaled by a scalar from another field");
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_same_field(b, "product");
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  }
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  a.require_same_field(b, "comparison");
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("kron across fields");
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          const Scalar& brc = b(r, c);
          if (!brc.is_zero()) k(i * b.rows() + r, j * b.cols() + c) = aij * brc;
        }
      }
    }
  }
  return k;
}

Matrix hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("hstack of nothing");
  std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    if (b.field() != blocks.front().field()) throw FieldMismatch("hstack across fields");
    cols += b.cols();
  }
  Matrix m(blocks.front().field(), rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, offset + c) = b(r, c);
    }
    offset += b.cols();
  }
  return m;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of nothing");
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    if (b.field() != blocks.front().field()) throw FieldMismatch("vstack across fields");
    rows += b.rows();
  }
  Matrix m(blocks.front().field(), rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(offset + r, c) = b(r, c);
    }
    offset += b.rows();
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace dtqft
