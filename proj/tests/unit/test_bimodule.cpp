#include <gtest/gtest.h>

#include "dtqft/bimodule.hpp"
#include "dtqft/sampling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dtqft;
using namespace fixtures;

TEST(Validate, RegularBimodulesAndLibraryModulesPass) {
  for (const auto& a : {k(), qz2(), qz3(), qs3(), m2()}) {
    EXPECT_TRUE(validate(regular_bimodule(a)).all_passed()) << a->name();
    EXPECT_TRUE(validate(*left_regular(a)).all_passed()) << a->name();
    for (const auto& m : left_module_library(a, k())) EXPECT_TRUE(validate(m).all_passed()) << m.name();
  }
  EXPECT_TRUE(validate(*simple_m2()).all_passed());
}

TEST(Validate, NonCommutingActionsFail) {
  // Left and right actions of Z/2 on k^2 by two different non-commuting involutions.
  Matrix swap = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  Matrix flip = Matrix::from_ints(Q, {{1, 0}, {0, -1}});
  Matrix id = Matrix::identity(Q, 2);
  Bimodule m("bad", qz2(), qz2(), 2, {id, swap}, {id, flip});
  EXPECT_FALSE(validate(m).all_passed());
}

TEST(Dual, RegularBimoduleDoubleDualIsCanonical) {
  Bimodule r = regular_bimodule(qs3());
  Bimodule d = dual(r);
  EXPECT_TRUE(validate(d).all_passed());
  EXPECT_EQ(d.left_algebra()->name(), r.right_algebra()->name());
  EXPECT_EQ(double_dual_iso(r), Matrix::identity(Q, r.dim()));
  Bimodule dd = dual(d);
  for (std::size_t i = 0; i < r.left_action().size(); ++i) EXPECT_EQ(dd.left_action()[i], r.left_action()[i]);
}

TEST(Dual, VectorSpaceDualHasTrivialActions) {
  Bimodule d = dual(*kn(4));
  EXPECT_EQ(d.dim(), 4u);
  EXPECT_EQ(d.left_action()[0], Matrix::identity(Q, 4));
  EXPECT_EQ(d.right_action()[0], Matrix::identity(Q, 4));
}

TEST(Dual, ActionsAreTransposes) {
  BimodulePtr m = left_regular(qz2());
  Bimodule d = dual(*m);
  // d is over (k, qZ2): the right action of s is the transpose of the left action on m.
  EXPECT_EQ(d.right_action()[1], m->left_action()[1].transpose());
  EXPECT_EQ(d.right_action()[1], Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(validate(d).all_passed());
}

TEST(TensorOver, UnitLaw) {
  BimodulePtr m = left_regular(qs3());
  TensorProduct t = tensor_over(regular_bimodule(qs3()), *m);
  EXPECT_EQ(t.module.dim(), m->dim());
  EXPECT_TRUE(validate(t.module).all_passed());
  // class(1 (x) m_j) realises the canonical map; it must intertwine the left action.
  const std::size_t n = m->dim();
  Matrix canon(Q, t.module.dim(), n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix plain(Q, qs3()->dim() * n, 1);
    for (std::size_t i = 0; i < qs3()->dim(); ++i) plain(i * n + j, 0) = qs3()->unit()(i, 0);
    Matrix cls = t.quotient.projection * plain;
    for (std::size_t r = 0; r < cls.rows(); ++r) canon(r, j) = cls(r, 0);
  }
  EXPECT_EQ(rank(canon), n);
  for (std::size_t g = 0; g < qs3()->dim(); ++g) {
    EXPECT_EQ(t.module.left_action()[g] * canon, canon * m->left_action()[g]);
  }
}

TEST(TensorOver, GroundFieldDimensionsMultiply) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) EXPECT_EQ(tensor_over(*kn(n), *kn(m)).module.dim(), n * m);
  }
}

TEST(TensorOver, RegularS3OverItself) {
  EXPECT_EQ(tensor_over(regular_bimodule(qs3()), regular_bimodule(qs3())).module.dim(), 6u);
}

TEST(TensorOver, SimpleModuleOfM2) {
  BimodulePtr v = simple_m2();
  Bimodule vd = dual(*v);
  EXPECT_EQ(tensor_over(vd, *v).module.dim(), 1u);  // Hom_M2(V, V) = k
  EXPECT_EQ(tensor_over(*v, vd).module.dim(), 4u);  // V (x)_k V* = M2
}

TEST(TensorOver, MismatchedAlgebrasThrow) {
  EXPECT_THROW(tensor_over(regular_bimodule(qz2()), regular_bimodule(qz3())), std::invalid_argument);
}

TEST(Words, ComposabilityAndAdjoint) {
  BimodulePtr v = simple_m2();
  EXPECT_NO_THROW(OneMorWord({Letter{v, Sign::minus}, Letter{v, Sign::plus}}));
  EXPECT_THROW(OneMorWord({Letter{v, Sign::plus}, Letter{v, Sign::plus}}), std::invalid_argument);
  OneMorWord w({Letter{v, Sign::plus}, Letter{v, Sign::minus}});
  EXPECT_EQ(w.to_string(), "V2:+,V2:-");
  EXPECT_EQ(w.adjoint().to_string(), "V2:+,V2:-");
  EXPECT_EQ(OneMorWord::empty(qs3()).to_string(), "1@" + qs3()->name());
  EXPECT_EQ(composite(OneMorWord::empty(qs3()))->module.dim(), 6u);
}

TEST(HomSpace, EmptyWordGivesTheCenter) {
  EXPECT_EQ(hom_space(OneMorWord::empty(qs3()), OneMorWord::empty(qs3())).dim(), 3u);
  EXPECT_EQ(hom_space(OneMorWord::empty(m2()), OneMorWord::empty(m2())).dim(), 1u);
}

TEST(HomSpace, VectorSpacesHaveAllMatrices) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(hom_space(word(kn(n)), word(kn(n))).dim(), n * n);
}

TEST(HomSpace, RegularM2BimoduleIsScalars) {
  auto r = share(regular_bimodule(m2()));
  EXPECT_EQ(hom_space(word(r), word(r)).dim(), 1u);
}

TEST(HomSpace, SchurOnS3Representations) {
  Matrix one = qs3()->unit();
  Matrix sum(Q, 6, 1);
  Matrix sign(Q, 6, 1);
  for (std::size_t g = 0; g < 6; ++g) {
    sum(g, 0) = Scalar(1);
    sign(g, 0) = Scalar(g < 3 ? 1 : -1);
  }
  BimodulePtr triv = left_ideal(qs3(), sum, "triv");
  BimodulePtr sgn = left_ideal(qs3(), sign, "sgn");
  ASSERT_EQ(triv->dim(), 1u);
  ASSERT_EQ(sgn->dim(), 1u);
  EXPECT_EQ(hom_space(word(triv), word(sgn)).dim(), 0u);
  EXPECT_EQ(hom_space(word(triv), word(triv)).dim(), 1u);
  EXPECT_EQ(hom_space(word(left_regular(qs3())), word(left_regular(qs3()))).dim(), 6u);
  EXPECT_EQ(hom_space(word(triv), word(left_regular(qs3()))).dim(), 1u);
}

TEST(HomSpace, BasisElementsIntertwineAndCoordinatesRoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto x = share(random_bimodule(rng, qz2(), qs3(), k(), 6, "x"));
    HomSpace h = hom_space(word(x), word(x));
    for (std::size_t i = 0; i < h.dim(); ++i) EXPECT_EQ(intertwiner_witness(h.morphism(i)), "");
    TwoMorphism phi = random_morphism(rng, h);
    Matrix c = h.coordinates(phi.matrix);
    Matrix back(Q, phi.matrix.rows(), phi.matrix.cols());
    for (std::size_t i = 0; i < h.dim(); ++i) back += h.basis[i] * c(i, 0);
    EXPECT_EQ(back, phi.matrix);
  }
}

TEST(Composition, UnitLaws) {
  Rng rng(8);
  auto x = share(random_bimodule(rng, m2(), qz2(), k(), 8, "x"));
  OneMorWord w = word(x);
  TwoMorphism phi = random_morphism(rng, hom_space(w, w));
  EXPECT_EQ(compose_vertical(TwoMorphism::identity(w), phi).matrix, phi.matrix);
  EXPECT_EQ(compose_vertical(phi, TwoMorphism::identity(w)).matrix, phi.matrix);
  TwoMorphism left = compose_horizontal(TwoMorphism::identity(OneMorWord::empty(m2())), phi);
  EXPECT_EQ(left.matrix, phi.matrix);
  TwoMorphism right = compose_horizontal(phi, TwoMorphism::identity(OneMorWord::empty(qz2())));
  EXPECT_EQ(right.matrix, phi.matrix);
}

TEST(Composition, InterchangeOnRandomData) {
  Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    auto x = share(random_bimodule(rng, qz2(), qz2(), k(), 2, "x"));
    auto y = share(random_bimodule(rng, qz2(), qz2(), k(), 2, "y"));
    TwoMorphism phi = random_morphism(rng, hom_space(word(x), word(x)));
    TwoMorphism psi = random_morphism(rng, hom_space(word(y), word(y)));
    TwoMorphism one_x = TwoMorphism::identity(word(x));
    TwoMorphism one_y = TwoMorphism::identity(word(y));
    EXPECT_EQ(compose_vertical(compose_horizontal(one_y, phi), compose_horizontal(psi, one_x)).matrix,
              compose_vertical(compose_horizontal(psi, one_x), compose_horizontal(one_y, phi)).matrix);
  }
}

TEST(Composition, NonIntertwinerIsRejected) {
  auto x = left_regular(qz2());
  TwoMorphism bad{word(x), word(x), Matrix::from_ints(Q, {{1, 0}, {0, 2}})};
  EXPECT_NE(intertwiner_witness(bad), "");
  EXPECT_THROW(require_intertwiner(bad), std::invalid_argument);
}

TEST(CyclicCoinvariants, UndecoratedCircles) {
  EXPECT_EQ(cyclic_coinvariants(DefectCircle{{}, m2()}).dim(), 1u);
  EXPECT_EQ(cyclic_coinvariants(DefectCircle{{}, qz2()}).dim(), 2u);
  EXPECT_EQ(cyclic_coinvariants(DefectCircle{{}, qs3()}).dim(),
            oracle::conjugacy_classes(symmetric_group_3().table));
  EXPECT_EQ(cyclic_coinvariants(DefectCircle{{}, k()}).dim(), 1u);
}

TEST(CyclicCoinvariants, VectorSpacePairOnTheGroundCircle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    BimodulePtr v = kn(n);
    DefectCircle c{{Letter{v, Sign::plus}, Letter{v, Sign::minus}}, k()};
    EXPECT_EQ(cyclic_coinvariants(c).dim(), n * n);
  }
}

TEST(CyclicCoinvariants, OpenCircleIsRejected) {
  DefectCircle c{{Letter{left_regular(qz2()), Sign::plus}}, qz2()};
  EXPECT_THROW(c.check(), std::invalid_argument);
}

TEST(StateSpace, HomDimensionMatchesCircleOnRandomWords) {
  Rng rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    auto x = share(random_bimodule(rng, m2(), qz2(), k(), 4, "x" + std::to_string(trial)));
    auto y = share(random_bimodule(rng, m2(), qz2(), k(), 4, "y" + std::to_string(trial)));
    EXPECT_EQ(hom_space(word(x), word(y)).dim(), cyclic_coinvariants(hom_circle(word(x), word(y))).dim());
  }
}
