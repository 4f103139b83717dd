#include "rbq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "rbq/kernels.hpp"
#include "rbq/linalg.hpp"

namespace rbq {

RBMatrix::RBMatrix(Index rows, Index cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RBMatrix: negative dimension");
  for (auto& p : parts_) p = Matrix::Zero(rows, cols);
}

RBMatrix::RBMatrix(Matrix a0, Matrix a1, Matrix a2, Matrix a3)
    : parts_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {
  for (const auto& p : parts_) {
    if (p.rows() != parts_[0].rows() || p.cols() != parts_[0].cols()) {
      throw std::invalid_argument("RBMatrix: component shapes differ");
    }
  }
}

RBMatrix RBMatrix::from_real(const Matrix& a0) {
  RBMatrix out(a0.rows(), a0.cols());
  out.parts_[0] = a0;
  return out;
}

RBMatrix RBMatrix::identity(Index n) { return from_real(Matrix::Identity(n, n)); }

RB RBMatrix::operator()(Index r, Index c) const {
  return {parts_[0](r, c), parts_[1](r, c), parts_[2](r, c), parts_[3](r, c)};
}

void RBMatrix::set(Index r, Index c, const RB& v) {
  parts_[0](r, c) = v.a0;
  parts_[1](r, c) = v.a1;
  parts_[2](r, c) = v.a2;
  parts_[3](r, c) = v.a3;
}

RBMatrix RBMatrix::columns(Index start, Index count) const {
  if (start < 0 || count < 0 || start + count > cols()) {
    throw std::out_of_range("RBMatrix::columns: range outside matrix");
  }
  return {parts_[0].middleCols(start, count), parts_[1].middleCols(start, count),
          parts_[2].middleCols(start, count), parts_[3].middleCols(start, count)};
}

RBMatrix& RBMatrix::operator+=(const RBMatrix& other) {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw std::invalid_argument("RBMatrix: shape mismatch in +");
  }
  for (int t = 0; t < 4; ++t) parts_[t] += other.parts_[t];
  return *this;
}

RBMatrix& RBMatrix::operator-=(const RBMatrix& other) {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw std::invalid_argument("RBMatrix: shape mismatch in -");
  }
  for (int t = 0; t < 4; ++t) parts_[t] -= other.parts_[t];
  return *this;
}

bool operator==(const RBMatrix& a, const RBMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int t = 0; t < 4; ++t) {
    if (a.component(t) != b.component(t)) return false;
  }
  return true;
}

RBMatrix operator+(RBMatrix a, const RBMatrix& b) { return a += b; }
RBMatrix operator-(RBMatrix a, const RBMatrix& b) { return a -= b; }

RBMatrix operator*(double s, RBMatrix a) {
  for (int t = 0; t < 4; ++t) a.component(t) *= s;
  return a;
}

RBMatrix hcat(const RBMatrix& a, const RBMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row counts differ");
  RBMatrix out(a.rows(), a.cols() + b.cols());
  for (int t = 0; t < 4; ++t) {
    out.component(t) << a.component(t), b.component(t);
  }
  return out;
}

double max_abs_diff(const RBMatrix& a, const RBMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (int t = 0; t < 4; ++t) {
    if (a.rows() * a.cols() == 0) break;
    worst = std::max(worst, (a.component(t) - b.component(t)).cwiseAbs().maxCoeff());
  }
  return worst;
}

Matrix realrep(const RBMatrix& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  const Matrix& a0 = a.component(0);
  const Matrix& a1 = a.component(1);
  const Matrix& a2 = a.component(2);
  const Matrix& a3 = a.component(3);
  Matrix r(4 * m, 4 * n);
  // clang-format off
  r << a0, -a1,  a2, -a3,
       a1,  a0,  a3,  a2,
       a2, -a3,  a0, -a1,
       a3,  a2,  a1,  a0;
  // clang-format on
  return r;
}

Matrix block_column(const RBMatrix& a) {
  Matrix c(4 * a.rows(), a.cols());
  c << a.component(0), a.component(1), a.component(2), a.component(3);
  return c;
}

RBMatrix from_block_column(const Matrix& stacked) {
  if (stacked.rows() % 4 != 0) {
    throw std::invalid_argument("from_block_column: row count not divisible by 4");
  }
  const Index m = stacked.rows() / 4;
  return {stacked.middleRows(0, m), stacked.middleRows(m, m), stacked.middleRows(2 * m, m),
          stacked.middleRows(3 * m, m)};
}

Matrix structural_operator(StructuralOp which, Index m) {
  if (m < 1) throw std::invalid_argument("structural_operator: m must be >= 1");
  // (block row, block column, sign) for the four nonzero identity blocks
  struct Entry {
    int row, col, sign;
  };
  static constexpr Entry q[] = {{0, 1, -1}, {1, 0, 1}, {2, 3, -1}, {3, 2, 1}};
  static constexpr Entry r[] = {{0, 2, 1}, {1, 3, 1}, {2, 0, 1}, {3, 1, 1}};
  static constexpr Entry s[] = {{0, 3, -1}, {1, 2, 1}, {2, 1, -1}, {3, 0, 1}};
  const Entry* table = which == StructuralOp::Q ? q : which == StructuralOp::R ? r : s;

  Matrix out = Matrix::Zero(4 * m, 4 * m);
  for (int e = 0; e < 4; ++e) {
    out.block(table[e].row * m, table[e].col * m, m, m) =
        static_cast<double>(table[e].sign) * Matrix::Identity(m, m);
  }
  return out;
}

RBMatrix matmul(const RBMatrix& a, const RBMatrix& c) { return kernels::rb_matmul(a, c); }

RBMatrix matmul_real(const RBMatrix& a, const Matrix& x) {
  if (a.cols() != x.rows()) throw std::invalid_argument("matmul_real: inner dimensions differ");
  return {a.component(0) * x, a.component(1) * x, a.component(2) * x, a.component(3) * x};
}

double frobenius_norm(const RBMatrix& a) {
  double sum = 0.0;
  for (int t = 0; t < 4; ++t) sum += a.component(t).squaredNorm();
  return std::sqrt(sum);
}

double default_rank_tolerance(const RBMatrix& a) {
  return static_cast<double>(std::max(4 * a.rows(), a.cols())) *
         std::numeric_limits<double>::epsilon();
}

bool has_full_column_rank(const RBMatrix& a, double tol) {
  if (a.cols() == 0) return true;
  if (4 * a.rows() < a.cols()) return false;
  if (tol < 0.0) tol = default_rank_tolerance(a);
  return numerical_rank(block_column(a), tol) == a.cols();
}

}  // namespace rbq
