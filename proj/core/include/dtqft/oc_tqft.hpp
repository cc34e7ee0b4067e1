#pragma once

#include <vector>

#include "dtqft/bimodule.hpp"
#include "dtqft/frobenius.hpp"
#include "dtqft/pivotal.hpp"
#include "dtqft/report.hpp"

namespace dtqft {

/// The commutative Frobenius algebra End(1_A) = Z(A) with its sphere pairing.
struct ClosedSector {
  AlgebraPtr algebra;
  Center center;
  /// Gram matrix of the pairing on the center basis, direct route.
  Matrix pairing;
  /// The same Gram matrix through left traces over the enveloping algebra.
  Matrix pairing_definitional;
  /// Handle element sum_i z^i z_i, as an element of A and in center coordinates.
  Matrix handle;
  Matrix handle_coordinates;

  /// <z1, z2> for central elements given as vectors of A.
  Scalar pair(const Matrix& z1, const Matrix& z2) const;
  /// The counit <x, 1>.
  Scalar counit(const Matrix& x) const { return pair(x, algebra->unit()); }
};

/// Direct route: the linear trace of x -> z1 z2 x on A.
Scalar sphere_pairing(const FrobeniusAlgebra& a, const Matrix& z1, const Matrix& z2);

/// A as a left module over A (x) A^op, i.e. a bimodule over (A (x) A^op, k).
Bimodule enveloping_module(const AlgebraPtr& a, const AlgebraPtr& envelope, const AlgebraPtr& k);

/// Computes the pairing both ways; throws std::logic_error if they differ.
ClosedSector closed_sector(const AlgebraPtr& a);

/// Symmetry, invariance, nondegeneracy, commutativity, associativity, unit,
/// route agreement, and basis independence of the handle element.
ValidationReport check_closed_sector(const ClosedSector& c);

/// The closed genus-g invariant counit(h^g).
Scalar surface_invariant(const ClosedSector& c, unsigned genus);

/// Boundary conditions are bimodules over (A, k); this is the word (X, +) from k to A.
OneMorWord boundary_word(const BimodulePtr& x);

/// Serre pairing tr_l(psi o phi) in End(1_k) = k for phi: X => Y, psi: Y => X.
Scalar cy_pairing(const TwoMorphism& phi, const TwoMorphism& psi);

/// Symmetry of the pairing on all basis pairs and invertibility of its Gram matrix.
ValidationReport check_serre(const BimodulePtr& x, const BimodulePtr& y);

/// beta_X(z): the endomorphism x -> z.x of X. Throws if z is not central.
TwoMorphism beta_bulk_boundary(const Matrix& z, const BimodulePtr& x);

/// beta^X(phi) = tr_r(phi) in Z(A).
CentralElement beta_boundary_bulk(const TwoMorphism& phi);

/// beta_X unital, multiplicative on the given central pairs, central in
/// End(X); and adjointness <beta_X z, phi> = <z, beta^X phi> on the given data.
ValidationReport check_bulk_boundary(const ClosedSector& c, const BimodulePtr& x, const std::vector<Matrix>& zs,
                                     const std::vector<TwoMorphism>& phis);

/// Cardy: the trace of h -> psi h phi on Hom(X, Y) equals
/// <beta^Y(psi), beta^X(phi)> for phi in End(X), psi in End(Y).
ValidationReport check_cardy(const ClosedSector& c, const TwoMorphism& phi, const TwoMorphism& psi);

/// Defect-loop identity for psi in End(D), D over (B, A):
/// the A-counit of tr_l(psi) equals the B-counit of tr_r(psi).
ValidationReport check_assumption_3_7(const TwoMorphism& psi);

/// dim Hom(x, y) against the dimension of the state space of the circle y . adjoint(x).
ValidationReport state_space_vs_hom(const OneMorWord& x, const OneMorWord& y);

}  // namespace dtqft
