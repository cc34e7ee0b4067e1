#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dtqft/bimodule.hpp"

namespace dtqft {

/// Seeded generator with portable integer draws (std distributions are
/// implementation-defined, so identical seeds could differ across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish index in [0, n), n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Integer in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Small integer matrix with entries in [-bound, bound].
Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols, long bound = 3);

/// Unit lower times unit upper triangular with small entries; determinant 1.
Matrix random_invertible(Rng& rng, Field field, std::size_t n);

/// Left A-modules, as bimodules over (A, k), of pairwise different
/// dimensions: the regular module and left ideals A x for a few sparse x.
/// Over a one-dimensional A these are k^1, k^2, k^3.
std::vector<Bimodule> left_module_library(const AlgebraPtr& a, const AlgebraPtr& k);

/// A random B-A-bimodule of dimension at most max_dim: a direct sum of
/// one or two blocks V (x) W* for left modules V of B and W of A (or the
/// regular bimodule when A = B), in a random basis. When no block fits,
/// the bound is raised to the smallest block.
Bimodule random_bimodule(Rng& rng, const AlgebraPtr& b, const AlgebraPtr& a, const AlgebraPtr& k, std::size_t max_dim,
                         std::string name);

/// A random left A-module (bimodule over (A, k)) from the library, in a
/// random basis; the bound is raised to the smallest module if needed.
Bimodule random_boundary(Rng& rng, const AlgebraPtr& a, const AlgebraPtr& k, std::size_t max_dim, std::string name);

/// A random element of a Hom space, with small integer coordinates.
TwoMorphism random_morphism(Rng& rng, const HomSpace& h);

}  // namespace dtqft
