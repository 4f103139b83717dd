#pragma once

#include <Eigen/Dense>

#include "rbq/errors.hpp"
#include "rbq/matrix.hpp"

namespace rbq {

/// Q^T M after n1 Householder reflections on the first n1 columns:
///
///   Q^T [Ca, Cb, D] = [ R11 R12 R1d ]   n1 rows
///                     [  0  R22 R2d ]   rows - n1
///
/// Q = H_1 ... H_n1 is kept in factored form.
class HouseholderReduction {
 public:
  HouseholderReduction(Matrix reflectors, Vector betas, Matrix reduced, Index n2);

  Index rows() const { return reduced_.rows(); }
  Index n1() const { return betas_.size(); }
  Index n2() const { return n2_; }
  Index d() const { return reduced_.cols() - n1() - n2_; }

  /// The full reduced matrix Q^T M.
  const Matrix& reduced() const { return reduced_; }

  Matrix r11() const { return reduced_.topLeftCorner(n1(), n1()); }
  Matrix r12() const { return reduced_.block(0, n1(), n1(), n2_); }
  Matrix r1d() const { return reduced_.topRightCorner(n1(), d()); }
  Matrix r22() const { return reduced_.block(n1(), n1(), rows() - n1(), n2_); }
  Matrix r2d() const { return reduced_.bottomRightCorner(rows() - n1(), d()); }

  /// Q X
  Matrix apply_q(Matrix x) const;
  /// Q^T X
  Matrix apply_qt(Matrix x) const;
  /// Dense Q, for tests.
  Matrix q() const;

  /// Column k holds the reflector vector v_k (v_k(k) = 1, zero above).
  const Matrix& reflectors() const { return reflectors_; }
  const Vector& betas() const { return betas_; }

 private:
  Matrix reflectors_;
  Vector betas_;
  Matrix reduced_;
  Index n2_;
};

/// Applies n1 Householder reflections to M, zeroing the subdiagonal of its
/// first n1 columns. Pivots of R11 come out nonnegative. The remaining
/// columns are split as n2 | d; n2 < 0 means all of them go to n2.
///
/// Throws SolveError(RankDeficient) if a pivot falls to tol times the largest
/// norm among the first n1 columns. A negative tol selects max(rows, n1) * eps;
/// tol = 0 disables the check.
HouseholderReduction householder_partial(const Matrix& m, Index n1, Index n2 = -1,
                                         double tol = -1.0);

/// Thin SVD U diag(sigma) V^T of a p x q matrix, k = min(p, q) triplets with
/// sigma nonincreasing. Tall inputs are QR-preconditioned, then reduced with
/// the parallel Jacobi kernel.
struct ThinSVD {
  Matrix u;      // p x k
  Vector sigma;  // k
  Matrix v;      // q x k
};
ThinSVD thin_svd(const Matrix& m);

/// SVD of a p x (n2 + d) matrix (p >= n2 + d), partitioned at n2:
///
///   U = [U1 U2],  Sigma = diag(Sigma1, Sigma2),  V = [V11 V12; V21 V22]
///
/// U is kept thin (p x (n2 + d)); the columns past n2 + d never enter any
/// formula that uses this partition.
struct SVDPartition {
  Matrix u;
  Vector sigma;
  Matrix v;
  Index n2 = 0;

  Index d() const { return v.cols() - n2; }
  Matrix u1() const { return u.leftCols(n2); }
  Matrix u2() const { return u.rightCols(u.cols() - n2); }
  Vector sigma1() const { return sigma.head(n2); }
  Vector sigma2() const { return sigma.tail(sigma.size() - n2); }
  Matrix v11() const { return v.topLeftCorner(n2, n2); }
  Matrix v12() const { return v.topRightCorner(n2, d()); }
  Matrix v21() const { return v.bottomLeftCorner(d(), n2); }
  Matrix v22() const { return v.bottomRightCorner(d(), d()); }
};
SVDPartition svd_partitioned(const Matrix& m, Index n2);

/// Number of singular values above tol * sigma_max.
Index numerical_rank(const Matrix& m, double tol);

struct LowRankApproximation {
  Matrix approx;
  /// ||M - approx||_F = sqrt(sum_{i > k} sigma_i^2)
  double error = 0.0;
  /// k >= rank(M): approx is M itself.
  bool degenerate = false;
};

/// Best Frobenius-norm rank-k approximation by truncated SVD.
LowRankApproximation best_rank_k(const Matrix& m, Index k);

/// Moore-Penrose pseudoinverse; singular values at or below tol * sigma_max
/// are treated as zero. A negative tol selects max(p, q) * eps.
Matrix pinv(const Matrix& m, double tol = -1.0);

/// Minimum-norm least-squares solution C^+ D of min ||C X - D||_F.
///
/// Every minimizer has the form C^+ D + (I - C^+ C) Y; only the
/// least-norm member is returned.
Matrix ls_real(const Matrix& c, const Matrix& d);

}  // namespace rbq
