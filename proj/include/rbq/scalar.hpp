#pragma once

#include <array>
#include <iosfwd>
#include <string>

namespace rbq {

/// Reduced biquaternion a0 + a1 i + a2 j + a3 k.
///
/// Multiplication is commutative with i^2 = k^2 = -1, j^2 = 1, ij = k,
/// jk = i, ki = -j. The algebra has zero divisors, e.g. (1 + j)(1 - j) = 0,
/// so no division is provided.
struct ReducedBiquaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  constexpr ReducedBiquaternion() = default;
  constexpr ReducedBiquaternion(double r) : a0(r) {}
  constexpr ReducedBiquaternion(double c0, double c1, double c2, double c3)
      : a0(c0), a1(c1), a2(c2), a3(c3) {}

  static constexpr ReducedBiquaternion i() { return {0, 1, 0, 0}; }
  static constexpr ReducedBiquaternion j() { return {0, 0, 1, 0}; }
  static constexpr ReducedBiquaternion k() { return {0, 0, 0, 1}; }

  constexpr double operator[](int t) const {
    return t == 0 ? a0 : t == 1 ? a1 : t == 2 ? a2 : a3;
  }
  constexpr std::array<double, 4> components() const { return {a0, a1, a2, a3}; }

  /// Exact componentwise equality.
  friend constexpr bool operator==(const ReducedBiquaternion&,
                                   const ReducedBiquaternion&) = default;
};

using RB = ReducedBiquaternion;

constexpr RB operator+(const RB& x, const RB& y) {
  return {x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3};
}

constexpr RB operator-(const RB& x, const RB& y) {
  return {x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2, x.a3 - y.a3};
}

constexpr RB operator-(const RB& x) { return {-x.a0, -x.a1, -x.a2, -x.a3}; }

// Paired so that swapping x and y rounds identically: x * y == y * x bitwise.
constexpr RB operator*(const RB& x, const RB& y) {
  return {(x.a0 * y.a0 + x.a2 * y.a2) - (x.a1 * y.a1 + x.a3 * y.a3),
          (x.a0 * y.a1 + x.a1 * y.a0) + (x.a2 * y.a3 + x.a3 * y.a2),
          (x.a0 * y.a2 + x.a2 * y.a0) - (x.a1 * y.a3 + x.a3 * y.a1),
          (x.a0 * y.a3 + x.a3 * y.a0) + (x.a1 * y.a2 + x.a2 * y.a1)};
}

constexpr RB operator*(double s, const RB& x) { return {s * x.a0, s * x.a1, s * x.a2, s * x.a3}; }
constexpr RB operator*(const RB& x, double s) { return s * x; }

inline RB& operator+=(RB& x, const RB& y) { return x = x + y; }
inline RB& operator-=(RB& x, const RB& y) { return x = x - y; }
inline RB& operator*=(RB& x, const RB& y) { return x = x * y; }

RB add(const RB& x, const RB& y);
RB mul(const RB& x, const RB& y);

/// sqrt(a0^2 + a1^2 + a2^2 + a3^2)
double norm(const RB& x);

/// Componentwise |x_t - y_t| <= tol for all four components.
bool approx_equal(const RB& x, const RB& y, double tol);

/// Renders "a0 + a1i + a2j + a3k", folding negative signs ("1 - 2i + ...").
std::string to_string(const RB& x);
std::ostream& operator<<(std::ostream& os, const RB& x);

}  // namespace rbq
