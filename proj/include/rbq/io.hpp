#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>

#include "rbq/errors.hpp"
#include "rbq/matrix.hpp"

namespace rbq {

// RB matrix container:
//
//   rbq m n
//   <A0: m lines of n comma-separated values>
//   <blank line>
//   <A1> <blank> <A2> <blank> <A3>
//
// A problem file holds two containers back to back, A (m x n) then B (m x d).
// Values are written with the shortest representation that round-trips.

/// Throws FormatError on malformed input or inconsistent block shapes.
RBMatrix read_rbq(std::istream& in);
void write_rbq(std::ostream& out, const RBMatrix& a);

RBMatrix read_rbq_file(const std::filesystem::path& path);
void write_rbq_file(const std::filesystem::path& path, const RBMatrix& a);

/// Reads A then B; throws FormatError if their row counts differ.
std::pair<RBMatrix, RBMatrix> read_problem_file(const std::filesystem::path& path);
void write_problem_file(const std::filesystem::path& path, const RBMatrix& a, const RBMatrix& b);

/// Plain real CSV, one matrix row per line.
void write_matrix_csv(const std::filesystem::path& path, const Matrix& x);
Matrix read_matrix_csv(const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);
/// Full-string parse; throws FormatError.
double parse_double(const std::string& text);

}  // namespace rbq
