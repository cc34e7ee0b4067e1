#include "dtqft/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace dtqft {

std::vector<std::size_t> RowEchelon::free_cols() const {
  std::vector<std::size_t> free;
  std::size_t next = 0;
  for (std::size_t c = 0; c < reduced.cols(); ++c) {
    if (next < pivot_cols.size() && pivot_cols[next] == c) {
      ++next;
    } else {
      free.push_back(c);
    }
  }
  return free;
}

RowEchelon row_reduce(Matrix m) {
  m.require_uniform_field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RowEchelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).rank();
  return row_reduce(m).rank();
}

Matrix kernel_basis(const Matrix& m) {
  RowEchelon ech = row_reduce(m);
  auto free = ech.free_cols();
  Matrix basis(m.field(), m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    std::size_t f = free[k];
    basis(f, k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < ech.rank(); ++i) {
      const Scalar& entry = ech.reduced(i, f);
      if (!entry.is_zero()) basis(ech.pivot_cols[i], k) = -entry;
    }
  }
  return basis;
}

QuotientSpace cokernel(const Matrix& m) {
  // Rows of the projection span the left kernel of m. Because each kernel
  // vector is 1 in its own free slot and 0 in the other free slots, picking
  // out the free slots gives a section with projection * section = id.
  const std::size_t n = m.rows();
  RowEchelon ech = row_reduce(m.transpose());
  auto free = ech.free_cols();
  QuotientSpace q;
  q.ambient_dim = n;
  q.projection = Matrix(m.field(), free.size(), n);
  q.section = Matrix(m.field(), n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    std::size_t f = free[k];
    q.projection(k, f) = Scalar::one(m.field());
    q.section(f, k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < ech.rank(); ++i) {
      const Scalar& entry = ech.reduced(i, f);
      if (!entry.is_zero()) q.projection(k, ech.pivot_cols[i]) = -entry;
    }
  }
  return q;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: row count mismatch");
  if (m.field() != rhs.field()) throw FieldMismatch("solve across fields");
  rhs.require_uniform_field();
  const std::size_t n = m.cols();
  Matrix aug(m.field(), m.rows(), n + rhs.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, n + c) = rhs(r, c);
  }
  RowEchelon ech = row_reduce(std::move(aug));
  for (std::size_t p : ech.pivot_cols) {
    if (p >= n) return std::nullopt;
  }
  Matrix x(m.field(), n, rhs.cols());
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(ech.pivot_cols[i], c) = ech.reduced(i, n + c);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  if (m.rows() == 0) return m;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix column_space_basis(const Matrix& m) {
  RowEchelon ech = row_reduce(m.transpose());
  Matrix basis(m.field(), m.rows(), ech.rank());
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, k) = ech.reduced(k, r);
  }
  return basis;
}

}  // namespace dtqft
