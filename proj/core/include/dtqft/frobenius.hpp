#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtqft/matrix.hpp"
#include "dtqft/report.hpp"

namespace dtqft {

/// Thrown when an operation needs an invertible Gram matrix or window element.
class NotSeparable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dual bases and the window element of a Frobenius form.
///
/// dual_basis[j] = sum_k (G^-1)_{kj} e_k satisfies form(e_i * dual_basis[j]) = delta_ij.
/// The window is w = sum_i e_i * dual_basis[i]; it is central for any
/// symmetric form, and invertibility of w is our separability criterion.
struct DualData {
  Matrix gram;
  Matrix gram_inv;
  std::vector<Matrix> dual_basis;  // column vectors
  Matrix window;
  std::optional<Matrix> window_inv;
};

/// Finite-dimensional algebra with a linear form, given by structure
/// constants in a fixed basis. Elements are column vectors of length dim().
///
/// The constructor only checks shapes and fields; the algebraic axioms are
/// checked by validate(). Immutable after construction; copies share the
/// lazily computed dual data.
class FrobeniusAlgebra {
 public:
  /// mult has dim^3 entries with e_i * e_j = sum_k mult[(i*dim + j)*dim + k] e_k.
  FrobeniusAlgebra(std::string name, std::vector<std::string> basis_labels, std::vector<Scalar> mult,
                   std::vector<Scalar> unit, std::vector<Scalar> form);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& structure_constants() const { return mult_; }
  const Matrix& unit() const { return unit_; }
  const std::vector<Scalar>& form_values() const { return form_; }

  Matrix basis_vector(std::size_t i) const { return Matrix::unit_vector(field_, dim_, i); }
  Matrix multiply(const Matrix& x, const Matrix& y) const;
  Scalar form(const Matrix& x) const;

  /// Matrix of y -> e_i * y.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  /// Matrix of y -> y * e_i.
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult_by(const Matrix& x) const;
  Matrix right_mult_by(const Matrix& x) const;

  Matrix gram() const;
  /// Throws NotSeparable when the Gram matrix is singular.
  const DualData& dual_data() const;
  /// True when the Gram matrix and the window are both invertible.
  bool is_separable() const;

  /// Indices of basis elements that generate A as a unital algebra, chosen
  /// greedily in basis order. Module relations and intertwining conditions
  /// only need to be imposed for these.
  const std::vector<std::size_t>& generators() const;

 private:
  struct Cache;

  std::string name_;
  std::size_t dim_ = 0;
  Field field_;
  std::vector<std::string> labels_;
  std::vector<Scalar> mult_;
  Matrix unit_;
  std::vector<Scalar> form_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  std::shared_ptr<Cache> cache_;
};

using AlgebraPtr = std::shared_ptr<const FrobeniusAlgebra>;

/// One report entry per axiom: associativity, unit, symmetry,
/// nondegeneracy, window_invertible, window_central.
ValidationReport validate(const FrobeniusAlgebra& a);

DualData dual_data(const FrobeniusAlgebra& a);

struct Center {
  Matrix basis;  // dim(A) x c, columns are central elements in echelon form
  /// product[i][j] = center coordinates of z_i * z_j.
  std::vector<std::vector<Matrix>> product;
  Matrix unit;  // center coordinates of 1

  std::size_t dim() const { return basis.cols(); }
  /// Center coordinates of a central element; throws if x is not central.
  Matrix coordinates(const Matrix& x) const;
  Matrix element(const Matrix& coords) const { return basis * coords; }
};

Center center(const FrobeniusAlgebra& a);

/// Group given by its multiplication table: table[i][j] = index of g_i g_j.
struct GroupTable {
  std::string name;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return table.size(); }
  /// Throws std::invalid_argument unless the table is a group.
  void check() const;
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
};

GroupTable cyclic_group(std::size_t n);
/// S3 acting on {0,1,2}; element 0 is the identity, 1..2 the 3-cycles,
/// 3..5 the transpositions.
GroupTable symmetric_group_3();

/// k[G] with form sum a_g g -> scale * a_e. A missing scale means |G|,
/// which makes the window equal to 1.
FrobeniusAlgebra group_algebra(const GroupTable& group, Field field, std::optional<Scalar> scale = std::nullopt);

/// M_n(k) with form a -> scale * tr(a); basis E_ij in row-major order.
/// A missing scale means n, which makes the window equal to 1.
FrobeniusAlgebra matrix_algebra(std::size_t n, Field field, std::optional<Scalar> scale = std::nullopt,
                                std::string name = {});

/// The one-dimensional algebra k with form(1) = 1.
FrobeniusAlgebra trivial_algebra(Field field, std::string name = "k");

/// A tensor B with basis e_i (x) f_j at index i*dim(B) + j and form eps_A * eps_B.
FrobeniusAlgebra tensor_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b, std::string name = {});
FrobeniusAlgebra opposite(const FrobeniusAlgebra& a, std::string name = {});
/// Same multiplication, form multiplied by lambda (nonzero).
FrobeniusAlgebra rescaled(const FrobeniusAlgebra& a, const Scalar& lambda, std::string name = {});

}  // namespace dtqft
