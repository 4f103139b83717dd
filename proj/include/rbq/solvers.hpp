#pragma once

#include <complex>

#include <Eigen/Dense>

#include "rbq/errors.hpp"
#include "rbq/linalg.hpp"
#include "rbq/matrix.hpp"

namespace rbq {

/// A X ~ B with A = [Aa, Ab] where the first n1 columns (Aa) are exact and
/// the remaining n2 = n - n1 columns and B carry errors. n1 = 0 is the total
/// least squares problem, n1 = n ordinary least squares.
struct MTLSProblem {
  RBMatrix a;
  RBMatrix b;
  Index n1 = 0;

  Index m() const { return a.rows(); }
  Index n() const { return a.cols(); }
  Index n2() const { return a.cols() - n1; }
  Index d() const { return b.cols(); }
  RBMatrix a_exact() const { return a.columns(0, n1); }
  RBMatrix a_noisy() const { return a.columns(n1, n2()); }

  /// Throws std::invalid_argument unless rows agree, m >= n + d, d >= 1 and
  /// 0 <= n1 <= n.
  void validate() const;
};

struct SolveOptions {
  /// Unique only if sigma_{n2} > sigma_{n2+1} * (1 + gap_tol).
  double gap_tol = 1e-10;
  /// Unique only if sigma_min(V22) > v22_tol * ||V22||_2.
  double v22_tol = 1e-10;
  /// Rank tolerance for the exact block; negative selects max(rows, n1) * eps.
  double rank_tol = -1.0;
  /// Recover the corrections [Eb, G]; the solution X does not need them.
  bool recover_perturbations = true;
};

/// Uniqueness conditions on the singular values of [R22, R2d] and on V22.
///
/// sigma_n2 is +inf when n2 = 0 (no condition). trailing_zero flags an exactly
/// zero smallest singular value, which happens for compatible systems and is
/// accepted.
struct SolvabilityReport {
  double sigma_n2 = 0.0;
  double sigma_n2_plus_1 = 0.0;
  bool gap_ok = false;
  double v22_min_singular = 0.0;
  bool v22_ok = false;
  bool unique = false;
  bool trailing_zero = false;
};

/// Solution of the real problem min ||[Eb, G]||_F s.t. Ca Xa + (Cb + Eb) Xb = D + G.
struct StackedSolution {
  Matrix x;                 // [Xa; Xb], n x d
  Matrix eb;                // rows x n2, empty unless perturbations recovered
  Matrix g;                 // rows x d, empty unless perturbations recovered
  double correction_norm = 0.0;
  Vector sigma;             // singular values of [R22, R2d]
  SolvabilityReport diagnostics;
  bool has_perturbations = false;
};

/// Mixed LS/TLS on real stacks: n1 Householder reflections on Ca, SVD of the
/// trailing block [R22, R2d], then
///
///   Xb = -V12 V22^{-1},   Xa = R11^{-1} (R1d - R12 Xb).
///
/// Throws SolveError (RankDeficient, NonUniqueGap, NonUniqueV22, NoConvergence).
StackedSolution solve_mtls_stacked(const Matrix& ca, const Matrix& cb, const Matrix& d,
                                   const SolveOptions& opts = {});

/// Real solution X of an RB problem with its RB corrections.
struct MTLSSolution {
  Matrix x;
  RBMatrix eb_hat;
  RBMatrix g_hat;
  /// ||[Eb_hat, G_hat]||_F; for the SVD routes this is the singular-value
  /// tail and is available even when perturbations are not recovered.
  double correction_norm = 0.0;
  SolvabilityReport diagnostics;
  bool has_perturbations = false;

  Matrix xa(Index n1) const { return x.topRows(n1); }
  Matrix xb(Index n1) const { return x.bottomRows(x.rows() - n1); }
};

/// Mixed least squares / total least squares over RB matrices.
MTLSSolution solve_mtls(const MTLSProblem& p, const SolveOptions& opts = {});

/// Total least squares: the mixed solver with n1 = 0, X = -V12 V22^{-1}.
MTLSSolution solve_tls(const RBMatrix& a, const RBMatrix& b, const SolveOptions& opts = {});

/// Least squares: minimum-norm X = C^+ D with C, D the block columns of A, B.
/// G_hat = A X - B and Eb_hat has no columns. Never fails on uniqueness;
/// diagnostics fields that depend on an SVD split are NaN.
MTLSSolution solve_ls(const RBMatrix& a, const RBMatrix& b, const SolveOptions& opts = {});

using ComplexMatrix = Eigen::MatrixXcd;

struct ComplexSolution {
  Matrix x;
  ComplexMatrix eb_hat;
  ComplexMatrix g_hat;
  double correction_norm = 0.0;
  SolvabilityReport diagnostics;
  bool has_perturbations = false;
};

/// Complex A X ~ B with real X, through the stacks [Re A; Im A] and [Re B; Im B].
/// n1 = 0 gives TLS, n1 = n LS (via the mixed route).
ComplexSolution solve_complex(const ComplexMatrix& a, const ComplexMatrix& b, Index n1,
                              const SolveOptions& opts = {});

struct ResidualReport {
  double residual = 0.0;
  bool pass = false;
};

/// ||Aa Xa + (Ab + Eb_hat) Xb - (B + G_hat)||_F against tol. Requires the
/// solution to carry its perturbations.
ResidualReport residual_check(const MTLSProblem& p, const MTLSSolution& s, double tol);

}  // namespace rbq
