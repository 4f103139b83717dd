#include "rbq/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace rbq {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  const std::optional<std::string>& peek() {
    if (!peeked_) {
      std::string line;
      if (std::getline(in_, line)) {
        next_ = trim(line);
      } else {
        next_.reset();
      }
      peeked_ = true;
    }
    return next_;
  }

  std::optional<std::string> take() {
    peek();
    peeked_ = false;
    ++line_no_;
    return std::move(next_);
  }

  void skip_blank() {
    while (peek() && peek()->empty()) take();
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::optional<std::string> next_;
  bool peeked_ = false;
  std::size_t line_no_ = 0;
};

[[noreturn]] void fail(const LineReader& r, const std::string& what) {
  throw FormatError("rbq line " + std::to_string(r.line_no()) + ": " + what);
}

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(parse_double(trim(cell)));
  if (!line.empty() && line.back() == ',') throw FormatError("trailing comma in row");
  return out;
}

void write_rows(std::ostream& out, const Matrix& x) {
  for (Index r = 0; r < x.rows(); ++r) {
    for (Index c = 0; c < x.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_double(x(r, c));
    }
    out << '\n';
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != last) {
    throw FormatError("not a number: '" + text + "'");
  }
  return v;
}

RBMatrix read_rbq(std::istream& in) {
  LineReader reader(in);
  reader.skip_blank();
  const auto header = reader.take();
  if (!header) fail(reader, "missing 'rbq m n' header");

  std::istringstream hs(*header);
  std::string tag;
  long long m = 0;
  long long n = 0;
  std::string extra;
  if (!(hs >> tag >> m >> n) || tag != "rbq" || (hs >> extra)) {
    fail(reader, "expected header 'rbq m n', got '" + *header + "'");
  }
  if (m < 1 || n < 1) fail(reader, "dimensions must be positive");

  std::array<Matrix, 4> parts;
  for (int t = 0; t < 4; ++t) {
    if (t > 0) {
      if (!reader.peek() || !reader.peek()->empty()) {
        fail(reader, "block " + std::to_string(t - 1) + " has more than " + std::to_string(m) +
                         " rows or no blank separator");
      }
      reader.skip_blank();
    }
    parts[static_cast<std::size_t>(t)].resize(m, n);
    for (long long r = 0; r < m; ++r) {
      const auto line = reader.take();
      if (!line || line->empty()) {
        fail(reader, "block " + std::to_string(t) + " has fewer than " + std::to_string(m) +
                         " rows");
      }
      std::vector<double> row;
      try {
        row = parse_row(*line);
      } catch (const FormatError& e) {
        fail(reader, e.what());
      }
      if (static_cast<long long>(row.size()) != n) {
        fail(reader, "block " + std::to_string(t) + " row has " + std::to_string(row.size()) +
                         " values, expected " + std::to_string(n));
      }
      for (long long c = 0; c < n; ++c) parts[static_cast<std::size_t>(t)](r, c) = row[c];
    }
  }
  const auto& after = reader.peek();
  if (after && !after->empty()) {
    fail(reader, "block 3 has more than " + std::to_string(m) + " rows");
  }
  return {std::move(parts[0]), std::move(parts[1]), std::move(parts[2]), std::move(parts[3])};
}

void write_rbq(std::ostream& out, const RBMatrix& a) {
  out << "rbq " << a.rows() << ' ' << a.cols() << '\n';
  for (int t = 0; t < 4; ++t) {
    if (t > 0) out << '\n';
    write_rows(out, a.component(t));
  }
}

RBMatrix read_rbq_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_rbq(in);
}

void write_rbq_file(const std::filesystem::path& path, const RBMatrix& a) {
  auto out = open_out(path);
  write_rbq(out, a);
  finish(out, path);
}

std::pair<RBMatrix, RBMatrix> read_problem_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  RBMatrix a = read_rbq(in);
  RBMatrix b = read_rbq(in);
  if (a.rows() != b.rows()) throw FormatError("problem file: A and B row counts differ");
  std::string rest;
  while (std::getline(in, rest)) {
    if (!trim(rest).empty()) throw FormatError("problem file: unexpected content after B");
  }
  return {std::move(a), std::move(b)};
}

void write_problem_file(const std::filesystem::path& path, const RBMatrix& a,
                        const RBMatrix& b) {
  auto out = open_out(path);
  write_rbq(out, a);
  out << '\n';
  write_rbq(out, b);
  finish(out, path);
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& x) {
  auto out = open_out(path);
  write_rows(out, x);
  finish(out, path);
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    rows.push_back(parse_row(line));
    if (rows.back().size() != rows.front().size()) throw FormatError("ragged CSV rows");
  }
  Matrix x(static_cast<Index>(rows.size()),
           rows.empty() ? 0 : static_cast<Index>(rows.front().size()));
  for (Index r = 0; r < x.rows(); ++r)
    for (Index c = 0; c < x.cols(); ++c) x(r, c) = rows[r][c];
  return x;
}

}  // namespace rbq
