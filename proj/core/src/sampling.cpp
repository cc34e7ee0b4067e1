#include "dtqft/sampling.hpp"

#include <algorithm>
#include <set>

#include "dtqft/linalg.hpp"

namespace dtqft {

Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols, long bound) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_int(field, rng.between(-bound, bound));
  }
  return m;
}

Matrix random_invertible(Rng& rng, Field field, std::size_t n) {
  Matrix lower = Matrix::identity(field, n);
  Matrix upper = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Scalar::from_int(field, rng.between(-1, 1));
      upper(j, i) = Scalar::from_int(field, rng.between(-1, 1));
    }
  }
  return lower * upper;
}

namespace {

Bimodule left_module(const AlgebraPtr& a, const AlgebraPtr& k, std::vector<Matrix> left, std::string name) {
  const std::size_t d = left.empty() ? 0 : left.front().rows();
  std::vector<Matrix> right{Matrix::identity(a->field(), d)};
  return Bimodule(std::move(name), a, k, d, std::move(left), std::move(right));
}

// The left ideal A x, in the echelon basis of its span.
std::vector<Matrix> ideal_action(const FrobeniusAlgebra& a, const Matrix& x) {
  Matrix basis = column_space_basis(a.right_mult_by(x));
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto m = solve(basis, a.left_mult(i) * basis);
    if (!m) throw std::logic_error("left ideal is not stable under left multiplication");
    action.push_back(std::move(*m));
  }
  return action;
}

Bimodule in_random_basis(Rng& rng, const Bimodule& m, std::string name) {
  Matrix t = random_invertible(rng, m.field(), m.dim());
  Matrix t_inv = *inverse(t);
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  for (const auto& l : m.left_action()) left.push_back(t * l * t_inv);
  for (const auto& r : m.right_action()) right.push_back(t * r * t_inv);
  return Bimodule(std::move(name), m.left_algebra(), m.right_algebra(), m.dim(), std::move(left), std::move(right));
}

// V (x) W* for left modules V of B and W of A.
Bimodule block(const Bimodule& v, const Bimodule& w) {
  const Field f = v.field();
  Matrix iv = Matrix::identity(f, v.dim());
  Matrix iw = Matrix::identity(f, w.dim());
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  for (const auto& l : v.left_action()) left.push_back(kron(l, iw));
  for (const auto& l : w.left_action()) right.push_back(kron(iv, l.transpose()));
  return Bimodule(v.name() + "|" + w.name(), v.left_algebra(), w.left_algebra(), v.dim() * w.dim(), std::move(left),
                  std::move(right));
}

Bimodule direct_sum(const Bimodule& x, const Bimodule& y) {
  const Field f = x.field();
  auto diag = [&](const Matrix& a, const Matrix& b) {
    Matrix m(f, a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    }
    return m;
  };
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  for (std::size_t i = 0; i < x.left_action().size(); ++i) left.push_back(diag(x.left_action()[i], y.left_action()[i]));
  for (std::size_t i = 0; i < x.right_action().size(); ++i) {
    right.push_back(diag(x.right_action()[i], y.right_action()[i]));
  }
  return Bimodule(x.name() + "+" + y.name(), x.left_algebra(), x.right_algebra(), x.dim() + y.dim(), std::move(left),
                  std::move(right));
}

}  // namespace

std::vector<Bimodule> left_module_library(const AlgebraPtr& a, const AlgebraPtr& k) {
  const Field f = a->field();
  std::vector<Bimodule> out;
  if (a->dim() == 1) {
    for (std::size_t n = 1; n <= 3; ++n) {
      out.push_back(left_module(a, k, {Matrix::identity(f, n)}, a->name() + "^" + std::to_string(n)));
    }
    return out;
  }
  std::vector<Matrix> candidates;
  Matrix all(f, a->dim(), 1);
  for (std::size_t i = 0; i < a->dim(); ++i) all(i, 0) = Scalar::one(f);
  candidates.push_back(all);
  for (std::size_t i = 0; i < a->dim(); ++i) candidates.push_back(a->basis_vector(i));
  for (std::size_t i = 0; i < a->dim(); ++i) {
    for (std::size_t j = i + 1; j < a->dim(); ++j) {
      candidates.push_back(a->basis_vector(i) + a->basis_vector(j));
      candidates.push_back(a->basis_vector(i) - a->basis_vector(j));
    }
  }
  std::set<std::size_t> seen;
  for (const auto& x : candidates) {
    std::size_t d = rank(a->right_mult_by(x));
    if (d == 0 || !seen.insert(d).second) continue;
    out.push_back(left_module(a, k, ideal_action(*a, x), a->name() + "x" + std::to_string(d)));
  }
  std::sort(out.begin(), out.end(), [](const Bimodule& p, const Bimodule& q) { return p.dim() < q.dim(); });
  return out;
}

Bimodule random_bimodule(Rng& rng, const AlgebraPtr& b, const AlgebraPtr& a, const AlgebraPtr& k, std::size_t max_dim,
                         std::string name) {
  if (same_algebra(*a, *b) && a->dim() <= max_dim && rng.below(4) == 0) {
    return in_random_basis(rng, regular_bimodule(a), std::move(name));
  }
  auto vs = left_module_library(b, k);
  auto ws = left_module_library(a, k);
  if (vs.empty() || ws.empty()) throw std::invalid_argument("no left modules to build bimodule blocks from");
  // The libraries are sorted by dimension, so the front pair is the smallest block.
  const std::size_t bound = std::max(max_dim, vs.front().dim() * ws.front().dim());
  std::vector<Bimodule> blocks;
  for (const auto& v : vs) {
    for (const auto& w : ws) {
      if (v.dim() * w.dim() <= bound) blocks.push_back(block(v, w));
    }
  }
  Bimodule m = blocks[rng.below(blocks.size())];
  if (rng.below(2) == 0) {
    std::vector<std::size_t> fitting;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (m.dim() + blocks[i].dim() <= bound) fitting.push_back(i);
    }
    if (!fitting.empty()) m = direct_sum(m, blocks[fitting[rng.below(fitting.size())]]);
  }
  return in_random_basis(rng, m, std::move(name));
}

Bimodule random_boundary(Rng& rng, const AlgebraPtr& a, const AlgebraPtr& k, std::size_t max_dim, std::string name) {
  auto lib = left_module_library(a, k);
  if (lib.empty()) throw std::invalid_argument("no left modules of " + a->name());
  const std::size_t bound = std::max(max_dim, lib.front().dim());
  std::vector<std::size_t> fitting;
  for (std::size_t i = 0; i < lib.size(); ++i) {
    if (lib[i].dim() <= bound) fitting.push_back(i);
  }
  Bimodule m = lib[fitting[rng.below(fitting.size())]];
  if (rng.below(3) == 0) {
    std::vector<std::size_t> more;
    for (std::size_t i : fitting) {
      if (m.dim() + lib[i].dim() <= bound) more.push_back(i);
    }
    if (!more.empty()) m = direct_sum(m, lib[more[rng.below(more.size())]]);
  }
  return in_random_basis(rng, m, std::move(name));
}

TwoMorphism random_morphism(Rng& rng, const HomSpace& h) {
  auto c = composite(h.source);
  auto d = composite(h.target);
  Matrix m(h.source.source()->field(), d->module.dim(), c->module.dim());
  for (const auto& b : h.basis) m += b * Scalar::from_int(m.field(), rng.between(-3, 3));
  return TwoMorphism{h.source, h.target, std::move(m)};
}

}  // namespace dtqft
