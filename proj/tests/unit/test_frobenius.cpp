#include <gtest/gtest.h>

#include "dtqft/frobenius.hpp"
#include "oracles.hpp"

using namespace dtqft;

namespace {

const Field Q = Field::rationals();

std::vector<Scalar> ints(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar(x));
  return out;
}

// Z/2 = {1, s} with the given form values on 1 and s.
FrobeniusAlgebra z2_with_form(long on_one, long on_s) {
  // 1*1 = 1, 1*s = s, s*1 = s, s*s = 1
  std::vector<Scalar> mult = ints({1, 0, 0, 1, 0, 1, 1, 0});
  return FrobeniusAlgebra("Z2f", {"1", "s"}, mult, ints({1, 0}), ints({on_one, on_s}));
}

bool passed(const ValidationReport& r, std::string_view name) {
  const CheckResult* e = r.find(name);
  return e && e->passed;
}

oracle::Table table_of(const GroupTable& g) { return g.table; }

}  // namespace

TEST(Validate, TrivialAlgebraPasses) { EXPECT_TRUE(validate(trivial_algebra(Q)).all_passed()); }

TEST(Validate, GroupAlgebraOfZ2WithScaleTwo) {
  FrobeniusAlgebra a = z2_with_form(2, 0);
  EXPECT_TRUE(validate(a).all_passed());
  EXPECT_EQ(a.gram(), Matrix::from_ints(Q, {{2, 0}, {0, 2}}));
}

TEST(Validate, DegenerateFormFailsNondegeneracy) {
  FrobeniusAlgebra a = z2_with_form(1, 1);
  ValidationReport r = validate(a);
  EXPECT_FALSE(passed(r, "nondegeneracy"));
  EXPECT_TRUE(passed(r, "associativity"));
  EXPECT_THROW(a.dual_data(), NotSeparable);
}

TEST(Validate, DualNumbersAreFrobeniusButNotSeparable) {
  // k[x]/x^2 with form(1) = 0, form(x) = 1: Gram [[0,1],[1,0]], window 2x is nilpotent.
  std::vector<Scalar> mult = ints({1, 0, 0, 1, 0, 1, 0, 0});
  FrobeniusAlgebra a("dual", {"1", "x"}, mult, ints({1, 0}), ints({0, 1}));
  ValidationReport r = validate(a);
  EXPECT_TRUE(passed(r, "associativity"));
  EXPECT_TRUE(passed(r, "nondegeneracy"));
  EXPECT_FALSE(passed(r, "window_invertible"));
  EXPECT_EQ(a.dual_data().window, Matrix::from_ints(Q, {{0}, {2}}));
  EXPECT_FALSE(a.is_separable());
}

TEST(Validate, BrokenUnitIsReported) {
  std::vector<Scalar> mult = ints({1, 0, 0, 1, 0, 0, 0, 1});  // x * 1 = 0
  FrobeniusAlgebra a("bad", {"1", "x"}, mult, ints({1, 0}), ints({1, 1}));
  EXPECT_FALSE(passed(validate(a), "unit"));
}

TEST(DualData, TrivialAlgebra) {
  const FrobeniusAlgebra k = trivial_algebra(Q);
  const DualData& d = k.dual_data();
  EXPECT_EQ(d.dual_basis[0], Matrix::from_ints(Q, {{1}}));
  EXPECT_EQ(d.window, Matrix::from_ints(Q, {{1}}));
}

TEST(DualData, MatrixAlgebraWindowScalesInverselyWithTheForm) {
  FrobeniusAlgebra trace_form = matrix_algebra(2, Q, Scalar(1));
  FrobeniusAlgebra doubled = matrix_algebra(2, Q, Scalar(2));
  Matrix id = trace_form.unit();
  EXPECT_EQ(trace_form.dual_data().window, id * Scalar(2));
  EXPECT_EQ(doubled.dual_data().window, id);
  // The dual of E_ij under the trace form is E_ji: labels are E11, E12, E21, E22.
  EXPECT_EQ(trace_form.dual_data().dual_basis[1], trace_form.basis_vector(2));
}

TEST(DualData, GroupAlgebraDualBasisIsInverseOverOrder) {
  GroupTable s3 = symmetric_group_3();
  FrobeniusAlgebra a = group_algebra(s3, Q);
  const DualData& d = a.dual_data();
  for (std::size_t g = 0; g < s3.order(); ++g) {
    EXPECT_EQ(d.dual_basis[g], a.basis_vector(oracle::inverse_of(table_of(s3), g)) * Scalar::parse(Q, "1/6"));
  }
  EXPECT_EQ(d.window, a.unit());
  EXPECT_TRUE(validate(a).all_passed());
}

TEST(Center, Examples) {
  EXPECT_EQ(center(matrix_algebra(2, Q)).dim(), 1u);
  EXPECT_EQ(center(matrix_algebra(2, Q)).element(center(matrix_algebra(2, Q)).unit), matrix_algebra(2, Q).unit());
  EXPECT_EQ(center(group_algebra(cyclic_group(2), Q)).dim(), 2u);
  GroupTable s3 = symmetric_group_3();
  EXPECT_EQ(center(group_algebra(s3, Q)).dim(), oracle::conjugacy_classes(s3.table));
}

TEST(Center, ClassSumsOfS3AreCentral) {
  GroupTable s3 = symmetric_group_3();
  FrobeniusAlgebra a = group_algebra(s3, Q);
  Center c = center(a);
  Matrix cycles = a.basis_vector(1) + a.basis_vector(2);
  Matrix transpositions = a.basis_vector(3) + a.basis_vector(4) + a.basis_vector(5);
  EXPECT_NO_THROW(c.coordinates(cycles));
  EXPECT_NO_THROW(c.coordinates(transpositions));
  EXPECT_THROW(c.coordinates(a.basis_vector(3)), std::invalid_argument);
}

TEST(Center, ConjugacyClassCountsForCyclicGroups) {
  for (std::size_t n = 1; n <= 5; ++n) {
    GroupTable g = cyclic_group(n);
    EXPECT_EQ(center(group_algebra(g, Q)).dim(), oracle::conjugacy_classes(g.table)) << n;
  }
}

TEST(GroupAlgebra, TrivialGroupIsTheGroundField) {
  FrobeniusAlgebra a = group_algebra(cyclic_group(1), Q);
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.structure_constant(0, 0, 0), Scalar(1));
  EXPECT_EQ(a.form_values()[0], Scalar(1));
}

TEST(GroupAlgebra, Z2GramAndWindow) {
  FrobeniusAlgebra a = group_algebra(cyclic_group(2), Q, Scalar(2));
  EXPECT_EQ(a.gram(), Matrix::from_ints(Q, {{2, 0}, {0, 2}}));
  EXPECT_EQ(a.dual_data().window, a.unit());
}

TEST(GroupAlgebra, BadTableIsRejected) {
  GroupTable g{"broken", {{0, 1}, {1, 1}}};
  EXPECT_THROW(g.check(), std::invalid_argument);
}

TEST(GroupAlgebra, CharacteristicDividingTheOrderIsNotSeparable) {
  FrobeniusAlgebra a = group_algebra(cyclic_group(2), Field::prime(2), Scalar::one(Field::prime(2)));
  EXPECT_FALSE(a.is_separable());
  EXPECT_FALSE(passed(validate(a), "window_invertible"));
}

TEST(MatrixAlgebra, OneByOneIsTheGroundField) {
  FrobeniusAlgebra a = matrix_algebra(1, Q, Scalar(1));
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_TRUE(validate(a).all_passed());
}

TEST(TensorAlgebra, UnitObjectAndWindowFactorisation) {
  FrobeniusAlgebra z2 = group_algebra(cyclic_group(2), Q);
  FrobeniusAlgebra m2 = matrix_algebra(2, Q, Scalar(1));
  FrobeniusAlgebra with_k = tensor_algebra(z2, trivial_algebra(Q));
  EXPECT_EQ(with_k.structure_constants(), z2.structure_constants());
  FrobeniusAlgebra t = tensor_algebra(z2, m2);
  EXPECT_TRUE(validate(t).all_passed());
  EXPECT_EQ(t.dual_data().window, kron(z2.dual_data().window, m2.dual_data().window));
}

TEST(Opposite, CommutativeAlgebraIsItsOwnOpposite) {
  FrobeniusAlgebra z3 = group_algebra(cyclic_group(3), Q);
  EXPECT_EQ(opposite(z3).structure_constants(), z3.structure_constants());
  FrobeniusAlgebra m2 = matrix_algebra(2, Q);
  FrobeniusAlgebra op = opposite(m2);
  EXPECT_TRUE(validate(op).all_passed());
  EXPECT_EQ(op.multiply(op.basis_vector(1), op.basis_vector(2)), m2.multiply(m2.basis_vector(2), m2.basis_vector(1)));
}

TEST(Generators, GenerateTheAlgebra) {
  for (const FrobeniusAlgebra& a : {group_algebra(symmetric_group_3(), Q), matrix_algebra(2, Q),
                                    group_algebra(cyclic_group(3), Q)}) {
    const auto& gens = a.generators();
    ASSERT_FALSE(gens.empty());
    EXPECT_LE(gens.size(), a.dim());
    // Words in the generators must span A.
    std::vector<Matrix> span{a.unit()};
    for (int round = 0; round < 4; ++round) {
      std::vector<Matrix> next = span;
      for (const auto& x : span) {
        for (std::size_t g : gens) next.push_back(a.multiply(x, a.basis_vector(g)));
      }
      span = next;
      if (span.size() > 200) break;
    }
    oracle::RationalMatrix rows;
    for (const auto& v : span) {
      std::vector<mpq_class> row;
      for (std::size_t i = 0; i < a.dim(); ++i) row.push_back(v(i, 0).rational());
      rows.push_back(row);
    }
    EXPECT_EQ(oracle::rank(rows), a.dim()) << a.name();
  }
}

TEST(Rescaled, FormScalesAndWindowShrinks) {
  FrobeniusAlgebra a = group_algebra(symmetric_group_3(), Q);
  FrobeniusAlgebra b = rescaled(a, Scalar(3));
  EXPECT_EQ(b.form(b.unit()), a.form(a.unit()) * Scalar(3));
  EXPECT_EQ(b.dual_data().window, a.dual_data().window * Scalar::parse(Q, "1/3"));
}
