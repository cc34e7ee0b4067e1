#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dtqft/bimodule.hpp"
#include "dtqft/report.hpp"

namespace dtqft {

/// Raised when constructed adjunction maps fail the straightening or
/// intertwining checks. Signals an engine bug, never bad user input.
class AdjunctionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Cups and caps for a word X from alpha to beta, with dagger X its adjoint word:
///   ev:         dagger X . X  => 1_alpha
///   coev:       1_beta        => X . dagger X
///   ev_tilde:   X . dagger X  => 1_beta
///   coev_tilde: 1_alpha       => dagger X . X
struct AdjunctionData {
  OneMorWord word;
  TwoMorphism ev;
  TwoMorphism coev;
  TwoMorphism ev_tilde;
  TwoMorphism coev_tilde;
};

/// Adjunction data of a single generator M, built from the dual-basis
/// formulas with w^-1 twists. Throws NotSeparable when an algebra has no
/// invertible window, AdjunctionFailure if a check fails. Memoized.
std::shared_ptr<const AdjunctionData> adjunction_maps(const BimodulePtr& m);

/// Adjunction data of a word: letters with orientation - swap the plain
/// and tilde maps of their generator, longer words nest the maps of
/// their first letter around those of the rest. Memoized.
std::shared_ptr<const AdjunctionData> adjunction_maps(const OneMorWord& x);

/// One entry per straightening identity plus one per intertwining check.
ValidationReport zorro_report(const AdjunctionData& adj);

/// An element of End(1_alpha) = Z(A), both as an algebra element and in
/// the coordinates of center(A).
struct CentralElement {
  AlgebraPtr algebra;
  Matrix element;
  Matrix center_coordinates;
};

/// Reads off the central element represented by an endomorphism of 1_alpha;
/// throws if phi is not such an endomorphism or its value is not central.
CentralElement central_value(const TwoMorphism& phi);

/// dim_l in Z(s(X)) and dim_r in Z(t(X)).
std::pair<CentralElement, CentralElement> quantum_dims(const OneMorWord& x);
std::pair<CentralElement, CentralElement> quantum_dims(const BimodulePtr& m);

/// tr_l(psi) in Z(s(X)) and tr_r(psi) in Z(t(X)) for an endomorphism psi of X.
CentralElement left_trace(const TwoMorphism& psi);
CentralElement right_trace(const TwoMorphism& psi);

/// The same traces evaluated directly as the loop composite
/// ev o (1 (x) psi) o coev~ (resp. ev~ o (psi (x) 1) o coev). The functions
/// above evaluate that composite once per word on a basis of End(X).
CentralElement left_trace_by_composite(const TwoMorphism& psi);
CentralElement right_trace_by_composite(const TwoMorphism& psi);
std::pair<CentralElement, CentralElement> traces(const TwoMorphism& psi);

/// The two mates dagger Y => dagger X of phi: X => Y, through ev/coev and
/// through ev_tilde/coev_tilde respectively.
TwoMorphism left_transpose(const TwoMorphism& phi);
TwoMorphism right_transpose(const TwoMorphism& phi);

/// A composable pair (y, x) with s(y) = t(x), tested as the product y x.
using WordPair = std::pair<OneMorWord, OneMorWord>;

/// Pivotality report for phi and for each word pair: left and right
/// transposes of phi agree; the transposes of 1_{yx} are identity matrices;
/// for a fresh generator C with composite equal to that of yx, the two
/// comparison maps dagger(C) => dagger(yx) = dagger x . dagger y agree and are invertible.
ValidationReport check_pivotal(const TwoMorphism& phi, const std::vector<WordPair>& pairs = {});

}  // namespace dtqft
