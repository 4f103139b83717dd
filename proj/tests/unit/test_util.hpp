#pragma once

#include <cstdint>
#include <random>

#include "rbq/matrix.hpp"
#include "rbq/scalar.hpp"

namespace rbq::test {

inline Matrix random_matrix(std::mt19937_64& gen, Index rows, Index cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix out(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) out(r, c) = dist(gen);
  return out;
}

inline RBMatrix random_rb(std::mt19937_64& gen, Index rows, Index cols) {
  Matrix a0 = random_matrix(gen, rows, cols);
  Matrix a1 = random_matrix(gen, rows, cols);
  Matrix a2 = random_matrix(gen, rows, cols);
  Matrix a3 = random_matrix(gen, rows, cols);
  return {std::move(a0), std::move(a1), std::move(a2), std::move(a3)};
}

inline RB random_scalar(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double a0 = dist(gen);
  const double a1 = dist(gen);
  const double a2 = dist(gen);
  const double a3 = dist(gen);
  return {a0, a1, a2, a3};
}

inline RB random_int_scalar(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> dist(-9, 9);
  const int a0 = dist(gen);
  const int a1 = dist(gen);
  const int a2 = dist(gen);
  const int a3 = dist(gen);
  return {double(a0), double(a1), double(a2), double(a3)};
}

/// 4x4 left-multiplication matrix of a scalar, written out entry by entry.
inline Eigen::Matrix4d scalar_rep(const RB& a) {
  Eigen::Matrix4d r;
  r << a.a0, -a.a1, a.a2, -a.a3,
       a.a1, a.a0, a.a3, a.a2,
       a.a2, -a.a3, a.a0, -a.a1,
       a.a3, a.a2, a.a1, a.a0;
  return r;
}

inline double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

}  // namespace rbq::test
