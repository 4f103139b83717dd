#include "rbq/solvers.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rbq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SolvabilityReport assess(const SVDPartition& svd, const SolveOptions& opts) {
  SolvabilityReport r;
  const Index n2 = svd.n2;
  const Vector& s = svd.sigma;
  r.sigma_n2 = n2 == 0 ? std::numeric_limits<double>::infinity() : s(n2 - 1);
  r.sigma_n2_plus_1 = s(n2);
  r.gap_ok = n2 == 0 || r.sigma_n2 > r.sigma_n2_plus_1 * (1.0 + opts.gap_tol);

  const Vector v22_sigma = thin_svd(svd.v22()).sigma;
  r.v22_min_singular = v22_sigma(v22_sigma.size() - 1);
  r.v22_ok = r.v22_min_singular > opts.v22_tol * v22_sigma(0);

  r.unique = r.gap_ok && r.v22_ok;
  r.trailing_zero = s(s.size() - 1) == 0.0;
  return r;
}

[[noreturn]] void reject(const SolvabilityReport& r) {
  std::ostringstream os;
  os.precision(17);
  if (!r.gap_ok) {
    os << "no unique solution: sigma_n2 = " << r.sigma_n2
       << " does not exceed sigma_n2+1 = " << r.sigma_n2_plus_1;
    throw SolveError(SolveErrorKind::NonUniqueGap, os.str());
  }
  os << "no unique solution: V22 is numerically singular (sigma_min = " << r.v22_min_singular
     << ")";
  throw SolveError(SolveErrorKind::NonUniqueV22, os.str());
}

MTLSSolution to_rb(StackedSolution s) {
  MTLSSolution out;
  out.x = std::move(s.x);
  out.correction_norm = s.correction_norm;
  out.diagnostics = s.diagnostics;
  out.has_perturbations = s.has_perturbations;
  if (s.has_perturbations) {
    out.eb_hat = from_block_column(s.eb);
    out.g_hat = from_block_column(s.g);
  }
  return out;
}

}  // namespace

void MTLSProblem::validate() const {
  if (a.rows() != b.rows()) throw std::invalid_argument("MTLSProblem: A and B row counts differ");
  if (b.cols() < 1) throw std::invalid_argument("MTLSProblem: B needs at least one column");
  if (n1 < 0 || n1 > a.cols()) throw std::invalid_argument("MTLSProblem: n1 outside [0, n]");
  if (a.rows() < a.cols() + b.cols()) throw std::invalid_argument("MTLSProblem: need m >= n + d");
}

StackedSolution solve_mtls_stacked(const Matrix& ca, const Matrix& cb, const Matrix& d,
                                   const SolveOptions& opts) {
  const Index rows = d.rows();
  const Index n1 = ca.cols();
  const Index n2 = cb.cols();
  const Index nd = d.cols();
  if (ca.rows() != rows || cb.rows() != rows) {
    throw std::invalid_argument("solve_mtls_stacked: row counts differ");
  }
  if (nd < 1) throw std::invalid_argument("solve_mtls_stacked: d must be >= 1");
  if (rows < n1 + n2 + nd) throw std::invalid_argument("solve_mtls_stacked: too few rows");

  if (n1 > 0) {
    const double tol =
        opts.rank_tol >= 0.0
            ? opts.rank_tol
            : static_cast<double>(std::max(rows, n1)) * std::numeric_limits<double>::epsilon();
    if (numerical_rank(ca, tol) < n1) {
      throw SolveError(SolveErrorKind::RankDeficient,
                       "exactly-known columns do not have full column rank");
    }
  }

  Matrix full(rows, n1 + n2 + nd);
  full << ca, cb, d;
  const HouseholderReduction hh = householder_partial(full, n1, n2, opts.rank_tol);
  const Matrix trailing = hh.reduced().bottomRightCorner(rows - n1, n2 + nd);
  const SVDPartition svd = svd_partitioned(trailing, n2);

  StackedSolution out;
  out.diagnostics = assess(svd, opts);
  if (!out.diagnostics.unique) reject(out.diagnostics);

  // Xb V22 = -V12, solved with a factorization of V22.
  const Eigen::PartialPivLU<Matrix> lu(svd.v22().transpose());
  const Matrix xb = lu.solve(-svd.v12().transpose()).transpose();
  out.x.resize(n1 + n2, nd);
  out.x.bottomRows(n2) = xb;
  if (n1 > 0) {
    out.x.topRows(n1) =
        hh.r11().triangularView<Eigen::Upper>().solve(hh.r1d() - hh.r12() * xb);
  }
  out.sigma = svd.sigma;
  out.correction_norm = svd.sigma2().norm();

  if (opts.recover_perturbations) {
    // Q [0; [R22~, R2d~] - [R22, R2d]] with [R22~, R2d~] = U1 Sigma1 [V11; V21]^T
    Matrix delta = Matrix::Zero(rows, n2 + nd);
    delta.bottomRows(rows - n1) =
        svd.u1() * svd.sigma1().asDiagonal() * svd.v.leftCols(n2).transpose() -
        trailing;
    const Matrix correction = hh.apply_q(std::move(delta));
    out.eb = correction.leftCols(n2);
    out.g = correction.rightCols(nd);
    out.has_perturbations = true;
  }
  return out;
}

MTLSSolution solve_mtls(const MTLSProblem& p, const SolveOptions& opts) {
  p.validate();
  const Matrix c = block_column(p.a);
  return to_rb(solve_mtls_stacked(c.leftCols(p.n1), c.rightCols(p.n2()), block_column(p.b),
                                  opts));
}

MTLSSolution solve_tls(const RBMatrix& a, const RBMatrix& b, const SolveOptions& opts) {
  return solve_mtls(MTLSProblem{a, b, 0}, opts);
}

MTLSSolution solve_ls(const RBMatrix& a, const RBMatrix& b, const SolveOptions& opts) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_ls: A and B row counts differ");
  if (a.rows() < a.cols()) throw std::invalid_argument("solve_ls: need m >= n");
  const Matrix c = block_column(a);
  const Matrix d = block_column(b);
  MTLSSolution out;
  out.x = ls_real(c, d);
  const Matrix g = c * out.x - d;
  out.correction_norm = g.norm();
  out.diagnostics.sigma_n2 = std::numeric_limits<double>::infinity();
  out.diagnostics.sigma_n2_plus_1 = kNaN;
  out.diagnostics.gap_ok = true;
  out.diagnostics.v22_min_singular = 1.0;
  out.diagnostics.v22_ok = true;
  out.diagnostics.unique = true;
  out.diagnostics.trailing_zero = out.correction_norm == 0.0;
  if (opts.recover_perturbations) {
    out.eb_hat = RBMatrix(a.rows(), 0);
    out.g_hat = from_block_column(g);
    out.has_perturbations = true;
  }
  return out;
}

ComplexSolution solve_complex(const ComplexMatrix& a, const ComplexMatrix& b, Index n1,
                              const SolveOptions& opts) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_complex: row counts differ");
  if (n1 < 0 || n1 > a.cols()) throw std::invalid_argument("solve_complex: n1 outside [0, n]");
  if (b.cols() < 1) throw std::invalid_argument("solve_complex: B needs at least one column");
  if (a.rows() < a.cols() + b.cols()) throw std::invalid_argument("solve_complex: need m >= n + d");

  const Index m = a.rows();
  Matrix c(2 * m, a.cols());
  c << a.real(), a.imag();
  Matrix d(2 * m, b.cols());
  d << b.real(), b.imag();

  StackedSolution s =
      solve_mtls_stacked(c.leftCols(n1), c.rightCols(a.cols() - n1), d, opts);
  ComplexSolution out;
  out.x = std::move(s.x);
  out.correction_norm = s.correction_norm;
  out.diagnostics = s.diagnostics;
  out.has_perturbations = s.has_perturbations;
  if (s.has_perturbations) {
    const std::complex<double> unit(0.0, 1.0);
    out.eb_hat = s.eb.topRows(m).cast<std::complex<double>>() +
                 unit * s.eb.bottomRows(m).cast<std::complex<double>>();
    out.g_hat = s.g.topRows(m).cast<std::complex<double>>() +
                unit * s.g.bottomRows(m).cast<std::complex<double>>();
  }
  return out;
}

ResidualReport residual_check(const MTLSProblem& p, const MTLSSolution& s, double tol) {
  if (!s.has_perturbations) {
    throw std::invalid_argument("residual_check: solution carries no perturbations");
  }
  if (s.x.rows() != p.n() || s.x.cols() != p.d() || s.eb_hat.cols() != p.n2() ||
      s.g_hat.cols() != p.d()) {
    throw std::invalid_argument("residual_check: shapes inconsistent with problem");
  }
  const RBMatrix lhs = matmul_real(p.a_exact(), s.xa(p.n1)) +
                       matmul_real(p.a_noisy() + s.eb_hat, s.xb(p.n1));
  ResidualReport r;
  r.residual = frobenius_norm(lhs - (p.b + s.g_hat));
  r.pass = r.residual <= tol;
  return r;
}

}  // namespace rbq
