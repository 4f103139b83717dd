#include "rbq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rbq::kernels {

namespace {

// Parallel regions are only opened for enough work and never nested; the
// experiment driver already runs trials in parallel.
bool go_parallel(Index work) {
#ifdef _OPENMP
  return work >= 32 && !omp_in_parallel() && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}

constexpr int kMaxSweeps = 80;

// Rotates columns i < j of w (and v) so that they become orthogonal.
// Returns false when the pair is already orthogonal to working precision.
bool rotate_pair(Matrix& w, Matrix& v, Index i, Index j, double tol) {
  const double alpha = w.col(i).squaredNorm();
  const double beta = w.col(j).squaredNorm();
  const double gamma = w.col(i).dot(w.col(j));
  if (alpha == 0.0 || beta == 0.0) return false;
  if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) return false;

  const double zeta = (beta - alpha) / (2.0 * gamma);
  const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = c * t;

  for (Index r = 0; r < w.rows(); ++r) {
    const double wi = w(r, i);
    const double wj = w(r, j);
    w(r, i) = c * wi - s * wj;
    w(r, j) = s * wi + c * wj;
  }
  for (Index r = 0; r < v.rows(); ++r) {
    const double vi = v(r, i);
    const double vj = v(r, j);
    v(r, i) = c * vi - s * vj;
    v(r, j) = s * vi + c * vj;
  }
  return true;
}

// Orders by descending column norm and normalizes; zero columns of U are
// completed to an orthonormal set.
JacobiSVD finalize(Matrix w, Matrix v, int sweeps, bool converged) {
  const Index p = w.rows();
  const Index q = w.cols();
  Vector norms(q);
  for (Index c = 0; c < q; ++c) norms(c) = w.col(c).norm();

  std::vector<Index> order(static_cast<std::size_t>(q));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return norms(a) > norms(b); });

  JacobiSVD out;
  out.u.resize(p, q);
  out.v.resize(q, q);
  out.sigma.resize(q);
  out.sweeps = sweeps;
  out.converged = converged;

  std::vector<Index> missing;
  for (Index k = 0; k < q; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.sigma(k) = norms(src);
    out.v.col(k) = v.col(src);
    if (norms(src) > 0.0) {
      out.u.col(k) = w.col(src) / norms(src);
    } else {
      missing.push_back(k);
    }
  }

  for (Index k : missing) out.u.col(k).setZero();
  Index probe = 0;
  for (Index k : missing) {
    for (; probe < p; ++probe) {
      Vector e = Vector::Unit(p, probe);
      for (int pass = 0; pass < 2; ++pass) e -= out.u * (out.u.transpose() * e);
      const double en = e.norm();
      if (en > 0.5) {
        out.u.col(k) = e / en;
        ++probe;
        break;
      }
    }
  }
  return out;
}

double rotation_tolerance(Index p) {
  return std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<Index>(p, 1));
}

// Circle-method schedule: rounds of disjoint pairs covering every pair once.
std::vector<std::vector<std::pair<Index, Index>>> round_robin(Index q) {
  const Index n = q + (q % 2);
  std::vector<std::vector<std::pair<Index, Index>>> rounds;
  if (q < 2) return rounds;
  for (Index r = 0; r < n - 1; ++r) {
    std::vector<std::pair<Index, Index>> pairs;
    auto push = [&](Index a, Index b) {
      if (a >= q || b >= q) return;
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    };
    push(r, n - 1);
    for (Index k = 1; k < n / 2; ++k) {
      push((r + k) % (n - 1), (r - k + n - 1) % (n - 1));
    }
    rounds.push_back(std::move(pairs));
  }
  return rounds;
}

void require_tall(const Matrix& m) {
  if (m.rows() < m.cols()) {
    throw std::invalid_argument("jacobi_svd: expected rows >= cols");
  }
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void apply_reflector(const Eigen::Ref<const Vector>& v, double beta, Eigen::Ref<Matrix> block) {
  if (beta == 0.0) return;
  const Index cols = block.cols();
#pragma omp parallel for schedule(static) if (go_parallel(cols * block.rows() / 64))
  for (Index c = 0; c < cols; ++c) {
    const double w = beta * v.dot(block.col(c));
    block.col(c).noalias() -= w * v;
  }
}

void apply_reflector_serial(const Eigen::Ref<const Vector>& v, double beta,
                            Eigen::Ref<Matrix> block) {
  if (beta == 0.0) return;
  for (Index c = 0; c < block.cols(); ++c) {
    const double w = beta * v.dot(block.col(c));
    block.col(c).noalias() -= w * v;
  }
}

JacobiSVD jacobi_svd(const Matrix& m) {
  require_tall(m);
  const Index q = m.cols();
  Matrix w = m;
  Matrix v = Matrix::Identity(q, q);
  const double tol = rotation_tolerance(m.rows());
  const auto rounds = round_robin(q);

  int sweep = 0;
  bool converged = q < 2;
  while (!converged && sweep < kMaxSweeps) {
    ++sweep;
    int rotated = 0;
    for (const auto& pairs : rounds) {
      const auto count = static_cast<Index>(pairs.size());
#pragma omp parallel for schedule(static) reduction(+ : rotated) if (go_parallel(count * m.rows() / 16))
      for (Index k = 0; k < count; ++k) {
        const auto [i, j] = pairs[static_cast<std::size_t>(k)];
        if (rotate_pair(w, v, i, j, tol)) ++rotated;
      }
    }
    converged = rotated == 0;
  }
  return finalize(std::move(w), std::move(v), sweep, converged);
}

JacobiSVD jacobi_svd_serial(const Matrix& m) {
  require_tall(m);
  const Index q = m.cols();
  Matrix w = m;
  Matrix v = Matrix::Identity(q, q);
  const double tol = rotation_tolerance(m.rows());

  int sweep = 0;
  bool converged = q < 2;
  while (!converged && sweep < kMaxSweeps) {
    ++sweep;
    int rotated = 0;
    for (Index i = 0; i + 1 < q; ++i) {
      for (Index j = i + 1; j < q; ++j) {
        if (rotate_pair(w, v, i, j, tol)) ++rotated;
      }
    }
    converged = rotated == 0;
  }
  return finalize(std::move(w), std::move(v), sweep, converged);
}

RBMatrix rb_matmul(const RBMatrix& a, const RBMatrix& c) {
  if (a.cols() != c.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ");
  }
  const Matrix& a0 = a.component(0);
  const Matrix& a1 = a.component(1);
  const Matrix& a2 = a.component(2);
  const Matrix& a3 = a.component(3);
  RBMatrix out(a.rows(), c.cols());
  Matrix& p0 = out.component(0);
  Matrix& p1 = out.component(1);
  Matrix& p2 = out.component(2);
  Matrix& p3 = out.component(3);
  const Index cols = c.cols();
#pragma omp parallel for schedule(static) if (go_parallel(cols * a.rows() * a.cols() / 256))
  for (Index j = 0; j < cols; ++j) {
    const auto c0 = c.component(0).col(j);
    const auto c1 = c.component(1).col(j);
    const auto c2 = c.component(2).col(j);
    const auto c3 = c.component(3).col(j);
    p0.col(j).noalias() = a0 * c0 - a1 * c1 + a2 * c2 - a3 * c3;
    p1.col(j).noalias() = a1 * c0 + a0 * c1 + a3 * c2 + a2 * c3;
    p2.col(j).noalias() = a2 * c0 - a3 * c1 + a0 * c2 - a1 * c3;
    p3.col(j).noalias() = a3 * c0 + a2 * c1 + a1 * c2 + a0 * c3;
  }
  return out;
}

RBMatrix rb_matmul_serial(const RBMatrix& a, const RBMatrix& c) {
  if (a.cols() != c.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ");
  }
  return from_block_column(realrep(a) * block_column(c));
}

}  // namespace rbq::kernels
