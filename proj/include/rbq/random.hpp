#pragma once

#include <cstdint>
#include <random>

#include "rbq/matrix.hpp"

namespace rbq {

/// Seedable generator with platform-stable output: std::mt19937_64 (fully
/// specified by the standard) plus explicit uniform and normal transforms.
/// The standard distributions are implementation-defined and not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1), 53 random bits.
  double uniform();
  /// Standard normal via the inverse normal CDF.
  double normal();

  /// Filled column by column.
  Matrix uniform_matrix(Index rows, Index cols);
  Matrix normal_matrix(Index rows, Index cols);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Independent stream seed for one experiment trial.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t m, std::uint64_t trial);

/// Inverse of the standard normal CDF, p in (0, 1); relative error < 1.2e-9.
double inverse_normal_cdf(double p);

}  // namespace rbq
