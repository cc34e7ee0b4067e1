#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dtqft/scalar.hpp"

namespace dtqft {

/// Dense row-major matrix of scalars from a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static Matrix identity(Field field, std::size_t n);
  /// Integer literal matrix, for small hand-written cases.
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);
  /// Column vector.
  static Matrix column(std::span<const Scalar> entries);
  static Matrix unit_vector(Field field, std::size_t n, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> data() const { return data_; }

  Matrix transpose() const;
  Matrix col(std::size_t c) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Scalar trace() const;
  bool is_zero() const;
  /// Throws FieldMismatch if some entry was assigned from another field.
  void require_uniform_field() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  void require_same_field(const Matrix& other, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; the row index of kron(a, b) is i * rows(b) + k.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(std::span<const Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace dtqft
