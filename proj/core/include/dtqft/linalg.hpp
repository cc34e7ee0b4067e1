#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dtqft/matrix.hpp"

namespace dtqft {

/// Reduced row echelon form. Pivots are chosen column by column from the
/// left; within a column the topmost nonzero entry wins and is scaled to 1.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
  /// Non-pivot columns in increasing order.
  std::vector<std::size_t> free_cols() const;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns form the echelon basis of ker m: one column per free variable,
/// with a 1 in that free slot and 0 in every other free slot.
Matrix kernel_basis(const Matrix& m);

/// Quotient of k^n by a subspace, with a projection onto the quotient
/// coordinates and a section back into k^n satisfying projection * section = id.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Matrix projection;  // q x n
  Matrix section;     // n x q

  std::size_t dim() const { return projection.rows(); }
};

/// Quotient of the target of m by its image.
QuotientSpace cokernel(const Matrix& m);

/// Particular solution x of m * x = rhs with all free variables set to 0,
/// or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

std::optional<Matrix> inverse(const Matrix& m);

/// Echelon basis (as columns) of the column space of m.
Matrix column_space_basis(const Matrix& m);

}  // namespace dtqft
