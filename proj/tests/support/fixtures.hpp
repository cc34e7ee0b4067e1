#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dtqft/bimodule.hpp"
#include "dtqft/frobenius.hpp"
#include "dtqft/registry.hpp"

namespace fixtures {

using namespace dtqft;

inline const Field Q = Field::rationals();

inline AlgebraPtr share(FrobeniusAlgebra a) { return std::make_shared<const FrobeniusAlgebra>(std::move(a)); }
inline BimodulePtr share(Bimodule m) { return std::make_shared<const Bimodule>(std::move(m)); }

inline const AlgebraPtr& k() {
  static const AlgebraPtr a = share(trivial_algebra(Q));
  return a;
}
inline const AlgebraPtr& qz2() {
  static const AlgebraPtr a = share(group_algebra(cyclic_group(2), Q));
  return a;
}
inline const AlgebraPtr& qz3() {
  static const AlgebraPtr a = share(group_algebra(cyclic_group(3), Q));
  return a;
}
inline const AlgebraPtr& qs3() {
  static const AlgebraPtr a = share(group_algebra(symmetric_group_3(), Q));
  return a;
}
inline const AlgebraPtr& m2() {
  static const AlgebraPtr a = share(matrix_algebra(2, Q));
  return a;
}

/// k^n as a k-k-bimodule.
inline BimodulePtr kn(std::size_t n) {
  std::vector<Matrix> act{Matrix::identity(Q, n)};
  return share(Bimodule("k" + std::to_string(n), k(), k(), n, act, act));
}

/// A as a left module over itself, i.e. a bimodule over (A, k).
inline BimodulePtr left_regular(const AlgebraPtr& a) {
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < a->dim(); ++i) left.push_back(a->left_mult(i));
  return share(Bimodule(a->name() + "_left", a, k(), a->dim(), left, {Matrix::identity(Q, a->dim())}));
}

/// The simple M2-module k^2, as a bimodule over (M2, k).
inline BimodulePtr simple_m2() {
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix e(Q, 2, 2);
      e(i, j) = Scalar(1);
      left.push_back(e);
    }
  }
  return share(Bimodule("V2", m2(), k(), 2, left, {Matrix::identity(Q, 2)}));
}

/// The left ideal A x of A, as a bimodule over (A, k), in an echelon basis.
inline BimodulePtr left_ideal(const AlgebraPtr& a, const Matrix& x, const std::string& name) {
  Matrix basis = column_space_basis(a->right_mult_by(x));
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < a->dim(); ++i) left.push_back(*solve(basis, a->left_mult(i) * basis));
  return share(Bimodule(name, a, k(), basis.cols(), left, {Matrix::identity(Q, basis.cols())}));
}

inline OneMorWord word(const BimodulePtr& m, Sign s = Sign::plus) { return OneMorWord({Letter{m, s}}); }

inline const Registry& bundled() {
  static const Registry reg = load_workspace(std::string(DTQFT_WORKSPACE_DIR) + "/workspace.json", Q);
  return reg;
}

}  // namespace fixtures
