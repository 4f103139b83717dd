#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "rbq/scalar.hpp"

namespace rbq {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense m x n reduced-biquaternion matrix A0 + A1 i + A2 j + A3 k.
///
/// Stored as four real component matrices of the same shape. Entry access
/// returns a value, not a reference; use set() to write.
class RBMatrix {
 public:
  RBMatrix() = default;
  RBMatrix(Index rows, Index cols);
  RBMatrix(Matrix a0, Matrix a1, Matrix a2, Matrix a3);

  /// Real matrix embedded with zero i, j, k parts.
  static RBMatrix from_real(const Matrix& a0);
  static RBMatrix identity(Index n);

  Index rows() const { return parts_[0].rows(); }
  Index cols() const { return parts_[0].cols(); }

  const Matrix& component(int t) const { return parts_[static_cast<std::size_t>(t)]; }
  Matrix& component(int t) { return parts_[static_cast<std::size_t>(t)]; }

  RB operator()(Index r, Index c) const;
  void set(Index r, Index c, const RB& v);

  /// Columns [start, start + count).
  RBMatrix columns(Index start, Index count) const;

  RBMatrix& operator+=(const RBMatrix& other);
  RBMatrix& operator-=(const RBMatrix& other);

  friend bool operator==(const RBMatrix& a, const RBMatrix& b);

 private:
  std::array<Matrix, 4> parts_;
};

RBMatrix operator+(RBMatrix a, const RBMatrix& b);
RBMatrix operator-(RBMatrix a, const RBMatrix& b);
RBMatrix operator*(double s, RBMatrix a);

/// [A, B]
RBMatrix hcat(const RBMatrix& a, const RBMatrix& b);

/// Largest componentwise absolute difference.
double max_abs_diff(const RBMatrix& a, const RBMatrix& b);

/// 4m x 4n real representation
///
///   [ A0 -A1  A2 -A3 ]
///   [ A1  A0  A3  A2 ]
///   [ A2 -A3  A0 -A1 ]
///   [ A3  A2  A1  A0 ]
///
/// satisfying (AC)^R = A^R C^R and ||A||_F = ||A^R||_F / 2.
Matrix realrep(const RBMatrix& a);

/// First block column of realrep(A): the 4m x n stack [A0; A1; A2; A3].
Matrix block_column(const RBMatrix& a);

/// Inverse of block_column. Throws std::invalid_argument if the row count is
/// not divisible by 4.
RBMatrix from_block_column(const Matrix& stacked);

enum class StructuralOp { Q, R, S };

/// Signed block permutations with realrep(A) = [Ac, Q_m Ac, R_m Ac, S_m Ac]
/// where Ac = block_column(A).
Matrix structural_operator(StructuralOp which, Index m);

/// RB matrix product. Throws std::invalid_argument on inner-dimension mismatch.
RBMatrix matmul(const RBMatrix& a, const RBMatrix& c);

/// A X for a real X: each component is multiplied by X.
RBMatrix matmul_real(const RBMatrix& a, const Matrix& x);

double frobenius_norm(const RBMatrix& a);

/// Conventional numerical-rank tolerance max(4m, n) * eps, relative to sigma_max.
double default_rank_tolerance(const RBMatrix& a);

/// A has full column rank iff block_column(A) does. Rank is the number of
/// singular values above tol * sigma_max of the real stack; a negative tol
/// selects default_rank_tolerance(A).
bool has_full_column_rank(const RBMatrix& a, double tol = -1.0);

}  // namespace rbq
