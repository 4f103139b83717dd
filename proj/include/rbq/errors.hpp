#pragma once

#include <stdexcept>
#include <string>

namespace rbq {

enum class SolveErrorKind {
  RankDeficient,  // exactly-known block is numerically rank deficient
  NonUniqueGap,   // sigma_{n2} does not exceed sigma_{n2+1}
  NonUniqueV22,   // trailing block of V is singular
  NoConvergence,  // SVD iteration did not converge
};

const char* to_string(SolveErrorKind kind);

/// Raised when a problem has no unique solution or cannot be reduced.
class SolveError : public std::runtime_error {
 public:
  SolveError(SolveErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  SolveErrorKind kind() const noexcept { return kind_; }

 private:
  SolveErrorKind kind_;
};

}  // namespace rbq

namespace rbq {

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File was read but its contents are malformed.
class FormatError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace rbq
