#pragma once

// Data-parallel inner kernels. Every parallel kernel has a serial reference
// kept for tests and the benchmark. The parallel variants produce results
// that do not depend on the thread count: work is split only across
// independent columns (or independent column pairs), never across a sum.

#include <Eigen/Dense>

#include "rbq/matrix.hpp"

namespace rbq::kernels {

/// Threads the parallel kernels may use (1 without OpenMP).
int max_threads();

/// block <- (I - beta v v^T) block, column-parallel.
void apply_reflector(const Eigen::Ref<const Vector>& v, double beta,
                     Eigen::Ref<Matrix> block);
void apply_reflector_serial(const Eigen::Ref<const Vector>& v, double beta,
                            Eigen::Ref<Matrix> block);

struct JacobiSVD {
  Matrix u;      // p x q, orthonormal columns
  Vector sigma;  // q values, nonincreasing
  Matrix v;      // q x q orthogonal
  int sweeps = 0;
  bool converged = false;
};

/// One-sided (Hestenes) Jacobi SVD of a p x q matrix, p >= q.
///
/// Rotations within a round of the round-robin schedule touch disjoint
/// column pairs and run in parallel.
JacobiSVD jacobi_svd(const Matrix& m);

/// Same iteration with the cyclic row-by-row pair ordering, single-threaded.
JacobiSVD jacobi_svd_serial(const Matrix& m);

/// RB matrix product, output columns in parallel.
RBMatrix rb_matmul(const RBMatrix& a, const RBMatrix& c);

/// Reference product through the real representation:
/// from_block_column(realrep(A) * block_column(C)).
RBMatrix rb_matmul_serial(const RBMatrix& a, const RBMatrix& c);

}  // namespace rbq::kernels
