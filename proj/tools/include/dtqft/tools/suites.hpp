#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtqft/registry.hpp"
#include "dtqft/report.hpp"
#include "dtqft/sampling.hpp"

namespace dtqft::tools {

/// How many seeded samples each suite draws, and how large they may be.
struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::size_t max_dim = 4;
};

/// The one-dimensional ground algebra of the registry, or a fresh "k".
AlgebraPtr ground_of(const Registry& reg);

/// Registered algebras in name order.
std::vector<AlgebraPtr> algebras_of(const Registry& reg);

/// A random word of length at most 2 from `from` to `to`; intermediate
/// phases are drawn from `phases`.
OneMorWord random_word(Rng& rng, const AlgebraPtr& from, const AlgebraPtr& to, const std::vector<AlgebraPtr>& phases,
                       const AlgebraPtr& k, std::size_t max_len, std::size_t max_dim, const std::string& tag);

/// Straightening identities for every registered bimodule, the regular
/// bimodule of every algebra, and `count` random bimodules into each algebra.
ValidationReport zorro_suite(const Registry& reg, const SuiteOptions& opt);

/// Agreement of the two transposes on random 2-morphisms, plus the
/// composite-adjoint comparison on random composable pairs.
ValidationReport pivotal_suite(const Registry& reg, const SuiteOptions& opt);

/// Interchange law and diagram evaluation against direct composition on
/// random diagrams built from random bimodules and morphisms.
ValidationReport interchange_suite(const Registry& reg, const SuiteOptions& opt);

/// Closed sector, bulk-boundary and Cardy checks per algebra.
ValidationReport cardy_suite(const Registry& reg, const SuiteOptions& opt);

/// Serre pairing on random pairs of boundary conditions per algebra.
ValidationReport serre_suite(const Registry& reg, const SuiteOptions& opt);

/// Defect-loop identity on random defects for every ordered algebra pair.
ValidationReport defect_loop_suite(const Registry& reg, const SuiteOptions& opt);

/// dim Hom(x, y) against the circle state space on random word pairs.
ValidationReport statespace_suite(const Registry& reg, const SuiteOptions& opt);

/// Names accepted by run_suite, in reporting order.
const std::vector<std::string>& suite_names();

/// Runs the named suite; throws std::invalid_argument for an unknown name.
ValidationReport run_suite(const std::string& name, const Registry& reg, const SuiteOptions& opt);

}  // namespace dtqft::tools
