#include "rbq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "rbq/kernels.hpp"

namespace rbq {

const char* to_string(SolveErrorKind kind) {
  switch (kind) {
    case SolveErrorKind::RankDeficient: return "rank-deficient";
    case SolveErrorKind::NonUniqueGap: return "non-unique (singular value gap)";
    case SolveErrorKind::NonUniqueV22: return "non-unique (singular V22)";
    case SolveErrorKind::NoConvergence: return "svd did not converge";
  }
  return "unknown";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Householder {
  double beta = 0.0;
  double mu = 0.0;  // resulting pivot, >= 0
};

// Overwrites x with v (v(0) = 1) such that (I - beta v v^T) x = mu e1, mu >= 0.
Householder make_householder(Eigen::Ref<Vector> x) {
  const Index p = x.size();
  const double x0 = x(0);
  const double sigma = p > 1 ? x.tail(p - 1).squaredNorm() : 0.0;
  Householder h;
  if (sigma == 0.0) {
    h.mu = std::abs(x0);
    h.beta = x0 < 0.0 ? 2.0 : 0.0;
    x(0) = 1.0;
    return h;
  }
  h.mu = std::sqrt(x0 * x0 + sigma);
  const double v0 = x0 <= 0.0 ? x0 - h.mu : -sigma / (x0 + h.mu);
  h.beta = 2.0 * v0 * v0 / (sigma + v0 * v0);
  x.tail(p - 1) /= v0;
  x(0) = 1.0;
  return h;
}

}  // namespace

HouseholderReduction::HouseholderReduction(Matrix reflectors, Vector betas, Matrix reduced,
                                           Index n2)
    : reflectors_(std::move(reflectors)),
      betas_(std::move(betas)),
      reduced_(std::move(reduced)),
      n2_(n2) {}

Matrix HouseholderReduction::apply_q(Matrix x) const {
  if (x.rows() != rows()) throw std::invalid_argument("apply_q: row count mismatch");
  for (Index k = n1() - 1; k >= 0; --k) {
    const Index len = rows() - k;
    kernels::apply_reflector(reflectors_.col(k).tail(len), betas_(k), x.bottomRows(len));
  }
  return x;
}

Matrix HouseholderReduction::apply_qt(Matrix x) const {
  if (x.rows() != rows()) throw std::invalid_argument("apply_qt: row count mismatch");
  for (Index k = 0; k < n1(); ++k) {
    const Index len = rows() - k;
    kernels::apply_reflector(reflectors_.col(k).tail(len), betas_(k), x.bottomRows(len));
  }
  return x;
}

Matrix HouseholderReduction::q() const { return apply_q(Matrix::Identity(rows(), rows())); }

HouseholderReduction householder_partial(const Matrix& m, Index n1, Index n2, double tol) {
  const Index rows = m.rows();
  if (n1 < 0 || n1 > m.cols()) throw std::invalid_argument("householder_partial: bad n1");
  if (n1 > rows) throw std::invalid_argument("householder_partial: n1 exceeds row count");
  if (n2 < 0) n2 = m.cols() - n1;
  if (n1 + n2 > m.cols()) throw std::invalid_argument("householder_partial: bad n2");
  if (tol < 0.0) tol = static_cast<double>(std::max(rows, n1)) * kEps;

  double scale = 0.0;
  for (Index c = 0; c < n1; ++c) scale = std::max(scale, m.col(c).norm());

  Matrix reduced = m;
  Matrix reflectors = Matrix::Zero(rows, n1);
  Vector betas(n1);
  for (Index k = 0; k < n1; ++k) {
    const Index len = rows - k;
    Vector x = reduced.col(k).tail(len);
    const Householder h = make_householder(x);
    if (tol > 0.0 && !(h.mu > tol * scale)) {
      throw SolveError(SolveErrorKind::RankDeficient,
                       "exactly-known columns are numerically rank deficient (pivot " +
                           std::to_string(k) + ")");
    }
    reflectors.col(k).tail(len) = x;
    betas(k) = h.beta;
    reduced(k, k) = h.mu;
    reduced.col(k).tail(len - 1).setZero();
    const Index trailing = reduced.cols() - k - 1;
    if (trailing > 0) {
      kernels::apply_reflector(x, h.beta, reduced.bottomRightCorner(len, trailing));
    }
  }
  return {std::move(reflectors), std::move(betas), std::move(reduced), n2};
}

ThinSVD thin_svd(const Matrix& m) {
  if (m.rows() < m.cols()) {
    ThinSVD t = thin_svd(m.transpose());
    std::swap(t.u, t.v);
    return t;
  }
  const Index q = m.cols();
  ThinSVD out;
  if (q == 0) {
    out.u.resize(m.rows(), 0);
    out.v.resize(0, 0);
    return out;
  }
  const HouseholderReduction qr = householder_partial(m, q, 0, 0.0);
  const Matrix r = qr.reduced().topRows(q).triangularView<Eigen::Upper>();
  kernels::JacobiSVD j = kernels::jacobi_svd(r);
  if (!j.converged) {
    throw SolveError(SolveErrorKind::NoConvergence, "Jacobi SVD did not converge");
  }
  Matrix ufull = Matrix::Zero(m.rows(), q);
  ufull.topRows(q) = j.u;
  out.u = qr.apply_q(std::move(ufull));
  out.sigma = std::move(j.sigma);
  out.v = std::move(j.v);
  return out;
}

SVDPartition svd_partitioned(const Matrix& m, Index n2) {
  if (n2 < 0 || n2 > m.cols()) throw std::invalid_argument("svd_partitioned: bad n2");
  if (m.rows() < m.cols()) {
    throw std::invalid_argument("svd_partitioned: need rows >= n2 + d");
  }
  ThinSVD t = thin_svd(m);
  SVDPartition p;
  p.u = std::move(t.u);
  p.sigma = std::move(t.sigma);
  p.v = std::move(t.v);
  p.n2 = n2;
  return p;
}

Index numerical_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  const Vector s = thin_svd(m).sigma;
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return static_cast<Index>((s.array() > tol * s(0)).count());
}

LowRankApproximation best_rank_k(const Matrix& m, Index k) {
  if (k < 0) throw std::invalid_argument("best_rank_k: k must be nonnegative");
  const ThinSVD t = thin_svd(m);
  const double tol = static_cast<double>(std::max(m.rows(), m.cols())) * kEps;
  const Index rank =
      (t.sigma.size() == 0 || t.sigma(0) == 0.0)
          ? 0
          : static_cast<Index>((t.sigma.array() > tol * t.sigma(0)).count());
  LowRankApproximation out;
  if (k >= rank) {
    out.approx = m;
    out.degenerate = true;
    return out;
  }
  out.approx = t.u.leftCols(k) * t.sigma.head(k).asDiagonal() * t.v.leftCols(k).transpose();
  out.error = t.sigma.tail(t.sigma.size() - k).norm();
  return out;
}

Matrix pinv(const Matrix& m, double tol) {
  if (tol < 0.0) tol = static_cast<double>(std::max(m.rows(), m.cols())) * kEps;
  const ThinSVD t = thin_svd(m);
  Matrix out = Matrix::Zero(m.cols(), m.rows());
  if (t.sigma.size() == 0 || t.sigma(0) == 0.0) return out;
  const double cutoff = tol * t.sigma(0);
  for (Index i = 0; i < t.sigma.size(); ++i) {
    if (t.sigma(i) > cutoff) {
      out.noalias() += (t.v.col(i) / t.sigma(i)) * t.u.col(i).transpose();
    }
  }
  return out;
}

Matrix ls_real(const Matrix& c, const Matrix& d) {
  if (c.rows() != d.rows()) throw std::invalid_argument("ls_real: row counts differ");
  return pinv(c) * d;
}

}  // namespace rbq
