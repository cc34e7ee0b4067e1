#include <gtest/gtest.h>

#include "dtqft/pivotal.hpp"
#include "dtqft/sampling.hpp"
#include "fixtures.hpp"

using namespace dtqft;
using namespace fixtures;

namespace {

Matrix scalar_elem(const AlgebraPtr& a, long c) { return a->unit() * Scalar(c); }

}  // namespace

TEST(Adjunction, ZorroHoldsForBasicBimodules) {
  std::vector<BimodulePtr> ms{kn(1),
                              kn(3),
                              share(regular_bimodule(qz2())),
                              share(regular_bimodule(m2())),
                              share(regular_bimodule(qs3())),
                              left_regular(qz2()),
                              left_regular(qs3()),
                              simple_m2()};
  for (const auto& m : ms) {
    EXPECT_TRUE(zorro_report(*adjunction_maps(m)).all_passed()) << m->name();
    EXPECT_TRUE(zorro_report(*adjunction_maps(word(m, Sign::minus))).all_passed()) << m->name();
  }
}

TEST(Adjunction, ZorroHoldsForRandomWords) {
  Rng rng(11);
  auto x = share(random_bimodule(rng, qz2(), m2(), k(), 4, "x"));
  auto y = share(random_bimodule(rng, m2(), k(), k(), 4, "y"));
  OneMorWord w({Letter{x, Sign::plus}, Letter{y, Sign::plus}, Letter{y, Sign::minus}});
  EXPECT_TRUE(zorro_report(*adjunction_maps(w)).all_passed());
}

TEST(Adjunction, VectorSpaceEvaluationIsThePairing) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto adj = adjunction_maps(kn(n));
    // ev o coev~ and ev~ o coev are both the loop, i.e. n.
    EXPECT_EQ(compose_vertical(adj->ev, adj->coev_tilde).matrix, Matrix::from_ints(Q, {{static_cast<long>(n)}}));
    EXPECT_EQ(compose_vertical(adj->ev_tilde, adj->coev).matrix, Matrix::from_ints(Q, {{static_cast<long>(n)}}));
    EXPECT_EQ(rank(adj->ev.matrix), 1u);
  }
}

TEST(Adjunction, NonSeparableAlgebraIsRejected) {
  const Field f2 = Field::prime(2);
  auto z2 = share(group_algebra(cyclic_group(2), f2, Scalar::one(f2)));
  EXPECT_THROW(adjunction_maps(share(regular_bimodule(z2))), NotSeparable);
}

TEST(QuantumDims, VectorSpaces) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto [l, r] = quantum_dims(kn(n));
    EXPECT_EQ(l.element, Matrix::from_ints(Q, {{static_cast<long>(n)}}));
    EXPECT_EQ(r.element, Matrix::from_ints(Q, {{static_cast<long>(n)}}));
  }
}

TEST(QuantumDims, RegularBimoduleIsTheUnit) {
  for (const auto& a : {qz2(), qs3(), m2()}) {
    auto [l, r] = quantum_dims(share(regular_bimodule(a)));
    EXPECT_EQ(l.element, a->unit()) << a->name();
    EXPECT_EQ(r.element, a->unit()) << a->name();
  }
}

TEST(QuantumDims, LeftRegularModule) {
  // Over (A, k): the k-side dimension is dim A, the A-side is 1.
  auto [l, r] = quantum_dims(left_regular(qz2()));
  EXPECT_EQ(l.element, Matrix::from_ints(Q, {{2}}));
  EXPECT_EQ(r.element, qz2()->unit());
  auto [l6, r6] = quantum_dims(left_regular(qs3()));
  EXPECT_EQ(l6.element, Matrix::from_ints(Q, {{6}}));
  EXPECT_EQ(r6.element, qs3()->unit());
}

TEST(QuantumDims, AdjointWordSwapsSides) {
  auto x = left_regular(qs3());
  auto [l, r] = quantum_dims(word(x));
  auto [la, ra] = quantum_dims(word(x, Sign::minus));
  EXPECT_EQ(la.element, r.element);
  EXPECT_EQ(ra.element, l.element);
}

TEST(Traces, OfIdentityAreTheDimensions) {
  auto x = left_regular(qs3());
  auto [l, r] = quantum_dims(x);
  auto [tl, tr] = traces(TwoMorphism::identity(word(x)));
  EXPECT_EQ(tl.element, l.element);
  EXPECT_EQ(tr.element, r.element);
}

TEST(Traces, OverTheGroundFieldIsTheMatrixTrace) {
  Rng rng(4);
  for (std::size_t n = 1; n <= 4; ++n) {
    TwoMorphism psi = random_morphism(rng, hom_space(word(kn(n)), word(kn(n))));
    auto [tl, tr] = traces(psi);
    EXPECT_EQ(tl.element(0, 0), psi.matrix.trace());
    EXPECT_EQ(tr.element(0, 0), psi.matrix.trace());
  }
}

TEST(Traces, AreLinear) {
  Rng rng(6);
  auto x = share(random_bimodule(rng, qs3(), qz2(), k(), 6, "x"));
  HomSpace h = hom_space(word(x), word(x));
  TwoMorphism a = random_morphism(rng, h);
  TwoMorphism b = random_morphism(rng, h);
  const Scalar lambda = Scalar::parse(Q, "-5/3");
  TwoMorphism combo{a.source, a.target, a.matrix * lambda + b.matrix};
  EXPECT_EQ(left_trace(combo).element, left_trace(a).element * lambda + left_trace(b).element);
  EXPECT_EQ(right_trace(combo).element, right_trace(a).element * lambda + right_trace(b).element);
}

TEST(Traces, AreCyclic) {
  Rng rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    auto x = share(random_bimodule(rng, m2(), qz2(), k(), 6, "x"));
    auto y = share(random_bimodule(rng, m2(), qz2(), k(), 6, "y"));
    HomSpace xy = hom_space(word(x), word(y));
    HomSpace yx = hom_space(word(y), word(x));
    if (xy.dim() == 0 || yx.dim() == 0) continue;
    TwoMorphism phi = random_morphism(rng, xy);
    TwoMorphism psi = random_morphism(rng, yx);
    EXPECT_EQ(left_trace(compose_vertical(psi, phi)).element, left_trace(compose_vertical(phi, psi)).element);
    EXPECT_EQ(right_trace(compose_vertical(psi, phi)).element, right_trace(compose_vertical(phi, psi)).element);
  }
}

TEST(Traces, KernelAgreesWithTheDirectComposite) {
  Rng rng(12);
  std::vector<OneMorWord> words{word(left_regular(qs3())), word(simple_m2(), Sign::minus),
                                OneMorWord({Letter{simple_m2(), Sign::plus}, Letter{simple_m2(), Sign::minus}})};
  for (int i = 0; i < 3; ++i) words.push_back(word(share(random_bimodule(rng, qz3(), m2(), k(), 6, "r"))));
  for (const auto& w : words) {
    TwoMorphism psi = random_morphism(rng, hom_space(w, w));
    EXPECT_EQ(left_trace(psi).element, left_trace_by_composite(psi).element) << w.to_string();
    EXPECT_EQ(right_trace(psi).element, right_trace_by_composite(psi).element) << w.to_string();
  }
}

TEST(Traces, RejectNonEndomorphisms) {
  auto x = left_regular(qz2());
  TwoMorphism bad{word(x), word(x), Matrix::from_ints(Q, {{1, 0}, {0, 2}})};
  EXPECT_THROW(left_trace(bad), std::invalid_argument);
}

TEST(Transposes, OnVectorSpacesAreMatrixTransposes) {
  Rng rng(2);
  auto v = kn(3);
  auto w = kn(2);
  TwoMorphism phi = random_morphism(rng, hom_space(word(v), word(w)));
  EXPECT_EQ(left_transpose(phi).matrix, phi.matrix.transpose());
  EXPECT_EQ(right_transpose(phi).matrix, phi.matrix.transpose());
}

TEST(Transposes, OfCentralScalarsOnTheUnit) {
  TwoMorphism z{OneMorWord::empty(qz2()), OneMorWord::empty(qz2()), qz2()->right_mult_by(scalar_elem(qz2(), 3))};
  EXPECT_EQ(left_transpose(z).matrix, z.matrix);
}

TEST(Pivotal, RandomQZ2Bimodules) {
  Rng rng(77);
  for (int trial = 0; trial < 3; ++trial) {
    auto x = share(random_bimodule(rng, qz2(), qz2(), k(), 2, "x"));
    auto y = share(random_bimodule(rng, qz2(), qz2(), k(), 2, "y"));
    TwoMorphism phi = random_morphism(rng, hom_space(word(x), word(x)));
    std::vector<WordPair> pairs{{word(y), word(x)}, {word(x, Sign::minus), word(y)}};
    EXPECT_TRUE(check_pivotal(phi, pairs).all_passed());
  }
}
