#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dtqft/frobenius.hpp"
#include "dtqft/linalg.hpp"
#include "dtqft/matrix.hpp"
#include "dtqft/report.hpp"

namespace dtqft {

/// Two algebras are the same phase when they are the same object or share a name.
bool same_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);

/// A finite-dimensional B-A-bimodule, i.e. a 1-morphism from A to B.
///
/// left_action[i] is the matrix of m -> e_i . m for the basis e_i of B,
/// right_action[j] the matrix of m -> m . f_j for the basis f_j of A.
class Bimodule {
 public:
  Bimodule(std::string name, AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
           std::vector<Matrix> right_action);

  const std::string& name() const { return name_; }
  const AlgebraPtr& left_algebra() const { return left_; }
  const AlgebraPtr& right_algebra() const { return right_; }
  /// s(M) = A, the right algebra.
  const AlgebraPtr& source() const { return right_; }
  /// t(M) = B, the left algebra.
  const AlgebraPtr& target() const { return left_; }
  std::size_t dim() const { return dim_; }
  Field field() const { return left_->field(); }

  const std::vector<Matrix>& left_action() const { return left_action_; }
  const std::vector<Matrix>& right_action() const { return right_action_; }
  /// Action matrices of arbitrary algebra elements (column vectors).
  Matrix left_by(const Matrix& b) const;
  Matrix right_by(const Matrix& a) const;

 private:
  std::string name_;
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::size_t dim_;
  std::vector<Matrix> left_action_;
  std::vector<Matrix> right_action_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

/// Checks that both actions are unital module structures that commute.
ValidationReport validate(const Bimodule& m);

/// A as an A-A-bimodule.
Bimodule regular_bimodule(const AlgebraPtr& a, std::string name = {});

/// The dual space with (a.phi.b)(x) = phi(b.x.a). In the dual basis the
/// left action of a is the transpose of the right action of a on m, and
/// vice versa.
Bimodule dual(const Bimodule& m, std::string name = {});

/// Matrix of the double-dual pairing iso m -> dual(dual(m)). With the
/// dual-basis conventions above it is the identity.
Matrix double_dual_iso(const Bimodule& m);

/// The same action matrices over other (e.g. rescaled) algebras.
Bimodule rebase(const Bimodule& m, AlgebraPtr left, AlgebraPtr right, std::string name = {});

struct TensorProduct {
  Bimodule module;
  /// Quotient of the plain space m (x) n, whose basis vector m_i (x) n_j sits
  /// at index i * dim(n) + j.
  QuotientSpace quotient;
};

/// m (x)_A n for m over (B, A) and n over (A, C).
TensorProduct tensor_over(const Bimodule& m, const Bimodule& n, std::string name = {});

enum class Sign { plus, minus };

/// One oriented defect line. (M, -) stands for the dual bimodule, with
/// s(M, -) = t(M) and t(M, -) = s(M).
struct Letter {
  BimodulePtr module;
  Sign sign = Sign::plus;

  const AlgebraPtr& source() const { return sign == Sign::plus ? module->source() : module->target(); }
  const AlgebraPtr& target() const { return sign == Sign::plus ? module->target() : module->source(); }
  Letter flipped() const { return {module, sign == Sign::plus ? Sign::minus : Sign::plus}; }
  std::string to_string() const;
  friend bool operator==(const Letter& a, const Letter& b);
};

/// An oriented word x_1 ... x_n of defect lines from alpha = s(x_n) to
/// beta = t(x_1); its composite bimodule is x_1 (x) ... (x) x_n.
class OneMorWord {
 public:
  /// Throws std::invalid_argument unless adjacent letters compose.
  explicit OneMorWord(std::vector<Letter> letters);
  /// The empty word 1_alpha.
  static OneMorWord empty(AlgebraPtr alpha);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }

  /// Reversed order with flipped orientations.
  OneMorWord adjoint() const;
  /// Prefix of length n, and the suffix after it.
  OneMorWord head(std::size_t n) const;
  OneMorWord tail(std::size_t n) const;

  /// "M:+,N:-", or "1@A" for the empty word.
  std::string to_string() const;
  friend bool operator==(const OneMorWord& a, const OneMorWord& b);

 private:
  OneMorWord(std::vector<Letter> letters, AlgebraPtr source, AlgebraPtr target);

  std::vector<Letter> letters_;
  AlgebraPtr source_;
  AlgebraPtr target_;
};

/// Juxtaposition x y, read as x (x) y; needs s(x) = t(y).
OneMorWord concat(const OneMorWord& x, const OneMorWord& y);

/// The composite bimodule of a word together with the maps to and from the
/// plain tensor product of its letters (the regular bimodule for 1_alpha).
struct Composite {
  Bimodule module;
  Matrix projection;  // composite dim x plain dim
  Matrix section;     // plain dim x composite dim
  std::vector<std::size_t> letter_dims;
};

/// Memoized per word; safe to call concurrently.
std::shared_ptr<const Composite> composite(const OneMorWord& word);

/// A bimodule map between the composites of two words with equal endpoints.
struct TwoMorphism {
  OneMorWord source;
  OneMorWord target;
  Matrix matrix;

  static TwoMorphism identity(const OneMorWord& word);
};

/// Empty witness means the matrix intertwines both actions.
std::string intertwiner_witness(const TwoMorphism& phi);
/// Throws std::invalid_argument with the witness unless phi intertwines.
void require_intertwiner(const TwoMorphism& phi);

struct HomSpace {
  OneMorWord source;
  OneMorWord target;
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
  TwoMorphism morphism(std::size_t i) const { return {source, target, basis[i]}; }
  /// Coordinates of a bimodule map in this basis.
  Matrix coordinates(const Matrix& phi) const;
};

/// Basis of all bimodule maps comp(x) -> comp(y), in column echelon form
/// of the row-major vectorized matrices.
HomSpace hom_space(const OneMorWord& x, const OneMorWord& y);

/// psi o phi.
TwoMorphism compose_vertical(const TwoMorphism& psi, const TwoMorphism& phi);
/// psi_tilde (x) phi : X~ X -> Y~ Y, for phi: X -> Y and psi_tilde: X~ -> Y~
/// with s(X~) = t(X).
TwoMorphism compose_horizontal(const TwoMorphism& psi_tilde, const TwoMorphism& phi);

/// Cyclic word of defect lines; the phase is only needed for the empty circle.
struct DefectCircle {
  std::vector<Letter> letters;
  AlgebraPtr phase;

  /// Throws std::invalid_argument unless the cyclic word closes up.
  void check() const;
  std::string to_string() const;
};

/// Cyclic coinvariants of the circle: the composite T over the phase A at
/// the basepoint, modulo a.t - t.a. The empty circle gives HH_0(A).
QuotientSpace cyclic_coinvariants(const DefectCircle& c);

/// The circle y followed by the adjoint of x, whose state space is
/// isomorphic to Hom(x, y).
DefectCircle hom_circle(const OneMorWord& x, const OneMorWord& y);

}  // namespace dtqft
