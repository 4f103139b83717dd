#include <gtest/gtest.h>

#include <random>

#include "rbq/kernels.hpp"
#include "test_util.hpp"

using namespace rbq;

namespace {

void expect_valid_svd(const Matrix& m, const kernels::JacobiSVD& s, double tol) {
  ASSERT_TRUE(s.converged);
  const Index q = m.cols();
  EXPECT_LE((s.u * s.sigma.asDiagonal() * s.v.transpose() - m).norm(), tol * m.norm());
  EXPECT_LE((s.u.transpose() * s.u - Matrix::Identity(q, q)).norm(), tol);
  EXPECT_LE((s.v.transpose() * s.v - Matrix::Identity(q, q)).norm(), tol);
  for (Index i = 1; i < q; ++i) EXPECT_GE(s.sigma(i - 1), s.sigma(i));
  EXPECT_GE(s.sigma.minCoeff(), 0.0);
}

TEST(JacobiKernel, ParallelAndSerialAgreeWithEigen) {
  std::mt19937_64 gen(1);
  for (Index q : {1, 2, 7, 12, 33}) {
    const Matrix m = test::random_matrix(gen, q + 9, q);
    const auto par = kernels::jacobi_svd(m);
    const auto ser = kernels::jacobi_svd_serial(m);
    expect_valid_svd(m, par, 1e-12);
    expect_valid_svd(m, ser, 1e-12);
    const Vector ref = Eigen::JacobiSVD<Matrix>(m).singularValues();
    EXPECT_LE((par.sigma - ref).norm(), 1e-12 * ref(0));
    EXPECT_LE((ser.sigma - ref).norm(), 1e-12 * ref(0));
  }
}

TEST(JacobiKernel, RankDeficientInputCompletesU) {
  std::mt19937_64 gen(2);
  Matrix m = test::random_matrix(gen, 10, 4);
  m.col(3).setZero();
  m.col(2) = m.col(0);
  const auto s = kernels::jacobi_svd(m);
  expect_valid_svd(m, s, 1e-12);
  EXPECT_EQ(s.sigma(3), 0.0);
  EXPECT_LE(s.sigma(2), 1e-14 * s.sigma(0));
}

TEST(JacobiKernel, DiagonalInput) {
  const Matrix m = Eigen::Vector3d(1, 3, 2).asDiagonal();
  const auto s = kernels::jacobi_svd(m);
  EXPECT_EQ(s.sigma, Eigen::Vector3d(3, 2, 1));
}

TEST(JacobiKernel, RejectsWideInput) {
  EXPECT_THROW(kernels::jacobi_svd(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST(ReflectorKernel, ParallelMatchesSerialBitwise) {
  std::mt19937_64 gen(3);
  Vector v = test::random_matrix(gen, 50, 1);
  v(0) = 1.0;
  const double beta = 2.0 / v.squaredNorm();
  const Matrix original = test::random_matrix(gen, 50, 80);
  Matrix a = original;
  Matrix b = original;
  kernels::apply_reflector(v, beta, a);
  kernels::apply_reflector_serial(v, beta, b);
  EXPECT_EQ(a, b);
  // a reflector is its own inverse
  kernels::apply_reflector(v, beta, a);
  EXPECT_LE((a - original).norm(), 1e-13 * original.norm());
}

TEST(ReflectorKernel, ZeroBetaIsIdentity) {
  Matrix a = Matrix::Random(5, 3);
  const Matrix before = a;
  kernels::apply_reflector(Vector::Ones(5), 0.0, a);
  EXPECT_EQ(a, before);
}

}  // namespace
