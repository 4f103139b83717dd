#include "rbq/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace rbq {

RB add(const RB& x, const RB& y) { return x + y; }

RB mul(const RB& x, const RB& y) { return x * y; }

double norm(const RB& x) {
  return std::sqrt(x.a0 * x.a0 + x.a1 * x.a1 + x.a2 * x.a2 + x.a3 * x.a3);
}

bool approx_equal(const RB& x, const RB& y, double tol) {
  for (int t = 0; t < 4; ++t) {
    if (!(std::abs(x[t] - y[t]) <= tol)) return false;
  }
  return true;
}

std::string to_string(const RB& x) {
  std::ostringstream os;
  os << x.a0;
  static constexpr const char* units[] = {"i", "j", "k"};
  for (int t = 1; t < 4; ++t) {
    const double c = x[t];
    // signbit so that -0 renders as "- 0"
    os << (std::signbit(c) ? " - " : " + ") << std::abs(c) << units[t - 1];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RB& x) { return os << to_string(x); }

}  // namespace rbq
