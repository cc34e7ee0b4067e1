#include <gtest/gtest.h>

#include "dtqft/linalg.hpp"
#include "dtqft/sampling.hpp"
#include "oracles.hpp"

using namespace dtqft;

namespace {

const Field Q = Field::rationals();

oracle::RationalMatrix plain(const Matrix& m) {
  oracle::RationalMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).rational();
  }
  return out;
}

}  // namespace

TEST(Scalar, ExactRationalArithmetic) {
  Scalar a = Scalar::parse(Q, "1/3");
  Scalar b = Scalar::parse(Q, "-2/6");
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ((a * a).to_string(), "1/9");
  EXPECT_EQ((a / b).to_string(), "-1");
  EXPECT_THROW(Scalar::zero(Q).inverse(), std::domain_error);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f7 = Field::parse("fp:7");
  Scalar nine_quarters = Scalar::parse(f7, "9/4");
  EXPECT_EQ(nine_quarters.to_string(), "4");
  EXPECT_EQ((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5)).to_string(), "1");
  EXPECT_EQ(Scalar::from_int(f7, -1).to_string(), "6");
  EXPECT_THROW(Field::parse("fp:8"), std::invalid_argument);
  EXPECT_THROW(Field::parse("reals"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse(f7, "1/7"), std::exception);
}

TEST(Scalar, MixingFieldsThrows) {
  EXPECT_THROW(Scalar::one(Q) + Scalar::one(Field::prime(5)), FieldMismatch);
}

TEST(KernelBasis, ZeroOneByOne) {
  Matrix k = kernel_basis(Matrix(Q, 1, 1));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0), Scalar(1));
}

TEST(KernelBasis, InjectiveMapHasEmptyKernel) { EXPECT_EQ(kernel_basis(Matrix::identity(Q, 3)).cols(), 0u); }

TEST(KernelBasis, RankOneTwoByTwo) {
  Matrix k = kernel_basis(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
  ASSERT_EQ(k.cols(), 1u);
  // proportional to (2, -1)
  EXPECT_EQ(k(0, 0) * Scalar(-1), k(1, 0) * Scalar(2));
  EXPECT_FALSE(k.is_zero());
}

TEST(Cokernel, Examples) {
  QuotientSpace zero = cokernel(Matrix(Q, 2, 2));
  EXPECT_EQ(zero.dim(), 2u);
  EXPECT_EQ(zero.projection, Matrix::identity(Q, 2));
  EXPECT_EQ(cokernel(Matrix::identity(Q, 2)).dim(), 0u);
  Matrix ones = Matrix::from_ints(Q, {{1}, {1}});
  QuotientSpace q = cokernel(ones);
  EXPECT_EQ(q.dim(), 1u);
  EXPECT_TRUE((q.projection * ones).is_zero());
  EXPECT_EQ(q.projection * q.section, Matrix::identity(Q, 1));
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)), Matrix::identity(Q, 6));
  EXPECT_EQ(kron(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{3}})), Matrix::from_ints(Q, {{6}}));
  EXPECT_EQ(kron(Matrix::from_ints(Q, {{1, 0}, {0, 2}}), Matrix::from_ints(Q, {{3}})).trace(), Scalar(9));
}

TEST(Solve, Examples) {
  Matrix v = Matrix::from_ints(Q, {{4}, {-1}});
  EXPECT_EQ(*solve(Matrix::identity(Q, 2), v), v);
  EXPECT_FALSE(solve(Matrix(Q, 2, 2), v).has_value());
  EXPECT_EQ(*solve(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{6}})), Matrix::from_ints(Q, {{3}}));
}

TEST(LinalgProperties, RankNullityAndSolveOnRandomMatrices) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.below(5);
    const std::size_t c = 1 + rng.below(5);
    Matrix m = random_matrix(rng, Q, r, c, 2);
    if (trial % 3 == 0) m = m * random_matrix(rng, Q, c, c, 1);  // often rank deficient
    const std::size_t rk = rank(m);
    EXPECT_EQ(rk, oracle::rank(plain(m)));
    Matrix k = kernel_basis(m);
    EXPECT_EQ(k.cols(), c - rk);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(cokernel(m).dim(), r - rk);
    Matrix x = random_matrix(rng, Q, c, 1, 3);
    auto sol = solve(m, m * x);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, m * x);
  }
}

TEST(LinalgProperties, InverseOfUnitriangularProducts) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix t = random_invertible(rng, Q, 1 + rng.below(6));
    auto inv = inverse(t);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(t * *inv, Matrix::identity(Q, t.rows()));
  }
  EXPECT_FALSE(inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})).has_value());
}
