#include "dtqft/oc_tqft.hpp"

#include <stdexcept>

#include "dtqft/linalg.hpp"

namespace dtqft {

namespace {

Matrix gram_of(const FrobeniusAlgebra& a, const Matrix& basis) {
  Matrix g(a.field(), basis.cols(), basis.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) g(i, j) = sphere_pairing(a, basis.col(i), basis.col(j));
  }
  return g;
}

// sum_i z^i z_i for the basis z_i (columns) and its dual under the Gram matrix g.
Matrix handle_of(const FrobeniusAlgebra& a, const Matrix& basis, const Matrix& g) {
  auto g_inv = inverse(g);
  if (!g_inv) throw std::logic_error("sphere pairing on Z(" + a.name() + ") is degenerate");
  Matrix dual = basis * *g_inv;
  Matrix h(a.field(), a.dim(), 1);
  for (std::size_t i = 0; i < basis.cols(); ++i) h += a.multiply(dual.col(i), basis.col(i));
  return h;
}

Matrix vectorize(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = m.data()[i];
  return v;
}

std::string morphism_label(const TwoMorphism& phi) {
  return phi.source.to_string() + " => " + phi.target.to_string();
}

bool is_central(const FrobeniusAlgebra& a, const Matrix& z) {
  return (a.left_mult_by(z) - a.right_mult_by(z)).is_zero();
}

}  // namespace

Scalar ClosedSector::pair(const Matrix& z1, const Matrix& z2) const { return sphere_pairing(*algebra, z1, z2); }

Scalar sphere_pairing(const FrobeniusAlgebra& a, const Matrix& z1, const Matrix& z2) {
  return a.left_mult_by(a.multiply(z1, z2)).trace();
}

Bimodule enveloping_module(const AlgebraPtr& a, const AlgebraPtr& envelope, const AlgebraPtr& k) {
  const std::size_t n = a->dim();
  if (envelope->dim() != n * n) throw std::invalid_argument("envelope of " + a->name() + " has the wrong dimension");
  std::vector<Matrix> left;
  left.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) left.push_back(a->left_mult(i) * a->right_mult(j));
  }
  std::vector<Matrix> right{Matrix::identity(a->field(), n)};
  return Bimodule(a->name() + "@env", envelope, k, n, std::move(left), std::move(right));
}

ClosedSector closed_sector(const AlgebraPtr& a) {
  ClosedSector c{a, center(*a), {}, {}, {}, {}};
  const Matrix& z = c.center.basis;
  c.pairing = gram_of(*a, z);

  auto k = std::make_shared<const FrobeniusAlgebra>(trivial_algebra(a->field()));
  auto envelope = std::make_shared<const FrobeniusAlgebra>(
      tensor_algebra(*a, opposite(*a), a->name() + "(x)" + a->name() + "^op"));
  auto module = std::make_shared<const Bimodule>(enveloping_module(a, envelope, k));
  OneMorWord word({Letter{module, Sign::plus}});
  c.pairing_definitional = Matrix(a->field(), c.center.dim(), c.center.dim());
  for (std::size_t i = 0; i < c.center.dim(); ++i) {
    for (std::size_t j = 0; j < c.center.dim(); ++j) {
      TwoMorphism psi{word, word, a->left_mult_by(a->multiply(z.col(i), z.col(j)))};
      c.pairing_definitional(i, j) = left_trace(psi).element(0, 0);
    }
  }
  if (!(c.pairing == c.pairing_definitional)) {
    throw std::logic_error("sphere pairing on Z(" + a->name() + ") differs between the linear trace (" +
                           c.pairing.to_string() + ") and the left trace over the envelope (" +
                           c.pairing_definitional.to_string() + ")");
  }
  c.handle = handle_of(*a, z, c.pairing);
  c.handle_coordinates = c.center.coordinates(c.handle);
  return c;
}

ValidationReport check_closed_sector(const ClosedSector& c) {
  ValidationReport report;
  const FrobeniusAlgebra& a = *c.algebra;
  const Matrix& z = c.center.basis;
  const std::size_t n = c.center.dim();
  const std::string who = "Z(" + a.name() + ")";

  report.add("routes_agree", who, c.pairing == c.pairing_definitional,
             c.pairing == c.pairing_definitional ? "" : c.pairing.to_string() + " vs " + c.pairing_definitional.to_string());
  report.add("pairing_symmetric", who, c.pairing == c.pairing.transpose(), "");
  report.add("pairing_nondegenerate", who, rank(c.pairing) == n, "rank " + std::to_string(rank(c.pairing)));

  std::string comm;
  std::string assoc;
  std::string invariant;
  for (std::size_t i = 0; i < n && comm.empty(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(c.center.product[i][j] == c.center.product[j][i])) {
        comm = "z" + std::to_string(i) + " z" + std::to_string(j);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix zij = a.multiply(z.col(i), z.col(j));
      for (std::size_t l = 0; l < n; ++l) {
        Matrix zjl = a.multiply(z.col(j), z.col(l));
        if (assoc.empty() && !(a.multiply(zij, z.col(l)) == a.multiply(z.col(i), zjl))) {
          assoc = "(z" + std::to_string(i) + " z" + std::to_string(j) + ") z" + std::to_string(l);
        }
        if (invariant.empty() && sphere_pairing(a, zij, z.col(l)) != sphere_pairing(a, z.col(i), zjl)) {
          invariant = "<z" + std::to_string(i) + " z" + std::to_string(j) + ", z" + std::to_string(l) + ">";
        }
      }
    }
  }
  report.add("pairing_invariant", who, invariant.empty(), invariant);
  report.add("center_commutative", who, comm.empty(), comm);
  report.add("center_associative", who, assoc.empty(), assoc);
  bool unital = true;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix zi = z.col(i);
    if (!(a.multiply(a.unit(), zi) == zi) || !(a.multiply(zi, a.unit()) == zi)) unital = false;
  }
  unital = unital && c.center.element(c.center.unit) == a.unit();
  report.add("center_unital", who, unital, "");

  // The handle element must not depend on the chosen basis of the center.
  Matrix t(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) t(i, j) = Scalar::one(a.field());
  }
  Matrix other = z * t;
  Matrix h2 = handle_of(a, other, gram_of(a, other));
  report.add("handle_basis_independent", who, h2 == c.handle,
             h2 == c.handle ? "" : c.handle.transpose().to_string() + " vs " + h2.transpose().to_string());
  report.add("handle_central", who, is_central(a, c.handle), "");
  return report;
}

Scalar surface_invariant(const ClosedSector& c, unsigned genus) {
  Matrix x = c.algebra->unit();
  for (unsigned g = 0; g < genus; ++g) x = c.algebra->multiply(x, c.handle);
  return c.counit(x);
}

OneMorWord boundary_word(const BimodulePtr& x) {
  if (x->source()->dim() != 1) {
    throw std::invalid_argument("boundary condition '" + x->name() + "' must be a bimodule over (A, k), its right algebra is " +
                                x->source()->name());
  }
  return OneMorWord({Letter{x, Sign::plus}});
}

Scalar cy_pairing(const TwoMorphism& phi, const TwoMorphism& psi) {
  TwoMorphism loop = compose_vertical(psi, phi);
  if (loop.source.source()->dim() != 1) {
    throw std::invalid_argument("pairing needs words starting at the ground phase, got " + loop.source.to_string());
  }
  return left_trace(loop).element(0, 0);
}

ValidationReport check_serre(const BimodulePtr& x, const BimodulePtr& y) {
  ValidationReport report;
  OneMorWord wx = boundary_word(x);
  OneMorWord wy = boundary_word(y);
  HomSpace xy = hom_space(wx, wy);
  HomSpace yx = hom_space(wy, wx);
  const std::string who = x->name() + ", " + y->name();
  const Field f = x->field();

  Matrix g(f, xy.dim(), yx.dim());
  Matrix g_swapped(f, xy.dim(), yx.dim());
  for (std::size_t i = 0; i < xy.dim(); ++i) {
    for (std::size_t j = 0; j < yx.dim(); ++j) {
      g(i, j) = cy_pairing(xy.morphism(i), yx.morphism(j));
      g_swapped(i, j) = cy_pairing(yx.morphism(j), xy.morphism(i));
    }
  }
  report.add("serre_symmetric", who, g == g_swapped, g == g_swapped ? "" : g.to_string() + " vs " + g_swapped.to_string());
  bool nondeg = xy.dim() == yx.dim() && rank(g) == xy.dim();
  report.add("serre_nondegenerate", who, nondeg,
             "dim Hom(X,Y) = " + std::to_string(xy.dim()) + ", dim Hom(Y,X) = " + std::to_string(yx.dim()) +
                 ", rank " + std::to_string(rank(g)));
  return report;
}

TwoMorphism beta_bulk_boundary(const Matrix& z, const BimodulePtr& x) {
  OneMorWord w = boundary_word(x);
  const FrobeniusAlgebra& a = *x->target();
  if (!is_central(a, z)) throw std::invalid_argument("element " + z.transpose().to_string() + " is not central in " + a.name());
  return TwoMorphism{w, w, x->left_by(z)};
}

CentralElement beta_boundary_bulk(const TwoMorphism& phi) { return right_trace(phi); }

ValidationReport check_bulk_boundary(const ClosedSector& c, const BimodulePtr& x, const std::vector<Matrix>& zs,
                                     const std::vector<TwoMorphism>& phis) {
  ValidationReport report;
  const FrobeniusAlgebra& a = *c.algebra;
  OneMorWord w = boundary_word(x);
  const std::string who = x->name();

  TwoMorphism one = beta_bulk_boundary(a.unit(), x);
  report.add("bulk_boundary_unital", who, one.matrix == Matrix::identity(a.field(), x->dim()), "");

  for (std::size_t i = 0; i < zs.size(); ++i) {
    const Matrix& z1 = zs[i];
    const Matrix& z2 = zs[(i + 1) % zs.size()];
    Matrix lhs = beta_bulk_boundary(a.multiply(z1, z2), x).matrix;
    Matrix rhs = beta_bulk_boundary(z1, x).matrix * beta_bulk_boundary(z2, x).matrix;
    report.add("bulk_boundary_multiplicative", who + ", pair " + std::to_string(i), lhs == rhs, "");
  }

  HomSpace end = hom_space(w, w);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    Matrix bz = beta_bulk_boundary(zs[i], x).matrix;
    bool central = true;
    for (const auto& b : end.basis) central = central && bz * b == b * bz;
    report.add("bulk_boundary_central", who + ", z" + std::to_string(i), central, "");
  }

  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < phis.size(); ++j) {
      Scalar lhs = cy_pairing(beta_bulk_boundary(zs[i], x), phis[j]);
      Scalar rhs = c.pair(zs[i], beta_boundary_bulk(phis[j]).element);
      report.add("bulk_boundary_adjoint", who + ", z" + std::to_string(i) + ", phi" + std::to_string(j), lhs == rhs,
                 lhs == rhs ? "" : lhs.to_string() + " vs " + rhs.to_string());
    }
  }
  return report;
}

ValidationReport check_cardy(const ClosedSector& c, const TwoMorphism& phi, const TwoMorphism& psi) {
  ValidationReport report;
  require_intertwiner(phi);
  require_intertwiner(psi);
  if (!(phi.source == phi.target) || !(psi.source == psi.target)) {
    throw std::invalid_argument("Cardy check needs endomorphisms, got " + morphism_label(phi) + " and " +
                                morphism_label(psi));
  }
  const OneMorWord& x = phi.source;
  const OneMorWord& y = psi.source;
  HomSpace h = hom_space(x, y);
  const Field f = phi.matrix.field();
  Scalar lhs = Scalar::zero(f);
  if (h.dim() > 0) {
    const std::size_t n = h.basis.front().rows() * h.basis.front().cols();
    Matrix stacked(f, n, h.dim());
    Matrix images(f, n, h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
      Matrix v = vectorize(h.basis[i]);
      Matrix img = vectorize(psi.matrix * h.basis[i] * phi.matrix);
      for (std::size_t r = 0; r < n; ++r) {
        stacked(r, i) = v(r, 0);
        images(r, i) = img(r, 0);
      }
    }
    auto coords = solve(stacked, images);
    if (!coords) throw std::logic_error("Hom space is not closed under pre- and post-composition");
    lhs = coords->trace();
  }
  Scalar rhs = c.pair(beta_boundary_bulk(psi).element, beta_boundary_bulk(phi).element);
  report.add("cardy", morphism_label(phi) + "; " + morphism_label(psi), lhs == rhs,
             "trace " + lhs.to_string() + ", pairing " + rhs.to_string());
  return report;
}

ValidationReport check_assumption_3_7(const TwoMorphism& psi) {
  ValidationReport report;
  auto [l, r] = traces(psi);
  const FrobeniusAlgebra& a = *l.algebra;
  const FrobeniusAlgebra& b = *r.algebra;
  Scalar lhs = sphere_pairing(a, l.element, a.unit());
  Scalar rhs = sphere_pairing(b, r.element, b.unit());
  report.add("defect_loop", morphism_label(psi), lhs == rhs,
             a.name() + " side " + lhs.to_string() + ", " + b.name() + " side " + rhs.to_string());
  return report;
}

ValidationReport state_space_vs_hom(const OneMorWord& x, const OneMorWord& y) {
  ValidationReport report;
  std::size_t hom = hom_space(x, y).dim();
  DefectCircle circle = hom_circle(x, y);
  std::size_t state = cyclic_coinvariants(circle).dim();
  report.add("state_space_dim", circle.to_string(), hom == state,
             "Hom " + std::to_string(hom) + ", state space " + std::to_string(state));
  return report;
}

}  // namespace dtqft
