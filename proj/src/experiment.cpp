#include "rbq/experiment.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rbq/errors.hpp"
#include "rbq/io.hpp"
#include "rbq/random.hpp"
#include "rbq/svg.hpp"

namespace rbq {

namespace {

RBMatrix replicate(const Matrix& e) { return {e, e, e, e}; }

std::uint64_t fnv1a(std::uint64_t h, const Matrix& x) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(x.data());
  const std::size_t len = static_cast<std::size_t>(x.size()) * sizeof(double);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const char* to_string(NoiseCase c) {
  switch (c) {
    case NoiseCase::RhsAndSubset: return "noisy Ab and B";
    case NoiseCase::AllColumns: return "noisy A and B";
    case NoiseCase::RhsOnly: return "noisy B";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (m_values.empty()) throw std::invalid_argument("experiment: no m values");
  if (n < 1 || d < 1) throw std::invalid_argument("experiment: n and d must be positive");
  if (n1 < 0 || n1 > n) throw std::invalid_argument("experiment: n1 outside [0, n]");
  if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (!(noise_scale >= 0.0)) throw std::invalid_argument("experiment: negative noise scale");
  for (Index m : m_values) {
    if (m < n + d) {
      throw std::invalid_argument("experiment: m = " + std::to_string(m) + " below n + d");
    }
  }
}

Instance generate_instance(const ExperimentConfig& cfg, Index m, std::uint64_t trial_seed) {
  const Index n = cfg.n;
  const Index n1 = cfg.n1;
  const Index n2 = cfg.n2();
  const Index d = cfg.d;
  Rng rng(trial_seed);

  Matrix f0 = rng.normal_matrix(m, n);
  Matrix f1 = rng.normal_matrix(m, n);
  Matrix f2 = rng.normal_matrix(m, n);
  Matrix f3 = rng.normal_matrix(m, n);
  RBMatrix f(std::move(f0), std::move(f1), std::move(f2), std::move(f3));
  Matrix x0 = rng.normal_matrix(n, d);
  RBMatrix g = matmul_real(f, x0);

  Index width = 0;
  switch (cfg.noise_case) {
    case NoiseCase::RhsAndSubset: width = n2 + d; break;
    case NoiseCase::AllColumns: width = n + d; break;
    case NoiseCase::RhsOnly: width = d; break;
  }
  const Matrix mix = rng.uniform_matrix(width, width);
  const Matrix e = cfg.noise_scale * (rng.uniform_matrix(m, width) * mix);

  RBMatrix a = std::move(f);
  RBMatrix b = std::move(g);
  switch (cfg.noise_case) {
    case NoiseCase::RhsAndSubset: {
      RBMatrix da(m, n1);
      a += hcat(da, replicate(e.leftCols(n2)));
      b += replicate(e.rightCols(d));
      break;
    }
    case NoiseCase::AllColumns:
      a += replicate(e.leftCols(n));
      b += replicate(e.rightCols(d));
      break;
    case NoiseCase::RhsOnly:
      b += replicate(e);
      break;
  }
  return {MTLSProblem{std::move(a), std::move(b), n1}, std::move(x0)};
}

std::uint64_t instance_hash(const MTLSProblem& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int t = 0; t < 4; ++t) h = fnv1a(h, p.a.component(t));
  for (int t = 0; t < 4; ++t) h = fnv1a(h, p.b.component(t));
  return h;
}

TrialResult run_trial(const ExperimentConfig& cfg, Index m, int trial) {
  const Instance inst =
      generate_instance(cfg, m, derive_seed(cfg.seed, static_cast<std::uint64_t>(m),
                                            static_cast<std::uint64_t>(trial)));
  const MTLSProblem& p = inst.problem;
  const std::uint64_t fingerprint = instance_hash(p);
  auto same_instance = [&] {
    if (instance_hash(p) != fingerprint) throw std::logic_error("instance modified between solves");
  };

  TrialResult r;
  r.m = m;
  r.noise_case = cfg.noise_case;
  SolveOptions opts;
  opts.recover_perturbations = false;
  try {
    same_instance();
    const MTLSSolution xm = solve_mtls(p, opts);
    same_instance();
    const MTLSSolution xt = solve_tls(p.a, p.b, opts);
    same_instance();
    const MTLSSolution xl = solve_ls(p.a, p.b, opts);
    r.eps1 = (xm.x - inst.x0).norm();
    r.eps2 = (xt.x - inst.x0).norm();
    r.eps3 = (xl.x - inst.x0).norm();
    r.mtls = xm.diagnostics;
    r.tls = xt.diagnostics;
    r.ls = xl.diagnostics;
  } catch (const SolveError& e) {
    r.skipped = true;
    r.skip_reason = e.what();
  }
  return r;
}

std::vector<SummaryRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto per_m = static_cast<std::size_t>(cfg.trials);
  const std::size_t total = cfg.m_values.size() * per_m;
  std::vector<TrialResult> results(total);

  const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    results[idx] = run_trial(cfg, cfg.m_values[idx / per_m], static_cast<int>(idx % per_m));
  }

  std::vector<SummaryRow> rows;
  for (std::size_t mi = 0; mi < cfg.m_values.size(); ++mi) {
    SummaryRow row;
    row.m = cfg.m_values[mi];
    row.noise_case = cfg.noise_case;
    int used = 0;
    for (std::size_t t = 0; t < per_m; ++t) {
      const TrialResult& r = results[mi * per_m + t];
      if (r.skipped) {
        ++row.skipped;
        continue;
      }
      row.eps1 += r.eps1;
      row.eps2 += r.eps2;
      row.eps3 += r.eps3;
      ++used;
    }
    const double scale = used > 0 ? 1.0 / used : std::nan("");
    row.eps1 *= scale;
    row.eps2 *= scale;
    row.eps3 *= scale;
    rows.push_back(row);
  }
  return rows;
}

std::string results_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  os << "m,case,eps1,eps2,eps3,skipped\n";
  for (const auto& r : rows) {
    os << r.m << ',' << static_cast<int>(r.noise_case) << ',' << format_double(r.eps1) << ','
       << format_double(r.eps2) << ',' << format_double(r.eps3) << ',' << r.skipped << '\n';
  }
  return os.str();
}

std::vector<SummaryRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "m,case,eps1,eps2,eps3,skipped") {
    throw FormatError("results.csv: bad header");
  }
  std::vector<SummaryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw FormatError("results.csv: expected 6 fields");
    SummaryRow r;
    r.m = static_cast<Index>(std::stoll(cells[0]));
    const int c = std::stoi(cells[1]);
    if (c < 1 || c > 3) throw FormatError("results.csv: bad case");
    r.noise_case = static_cast<NoiseCase>(c);
    r.eps1 = parse_double(cells[2]);
    r.eps2 = parse_double(cells[3]);
    r.eps3 = parse_double(cells[4]);
    r.skipped = std::stoi(cells[5]);
    rows.push_back(r);
  }
  return rows;
}

void emit_outputs(const std::vector<SummaryRow>& rows, const std::filesystem::path& out_dir) {
  if (rows.empty()) throw std::invalid_argument("emit_outputs: no results");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to " + path.string() + " failed");
  };
  write(out_dir / "results.csv", results_csv(rows));

  std::map<int, std::vector<const SummaryRow*>> by_case;
  for (const auto& r : rows) by_case[static_cast<int>(r.noise_case)].push_back(&r);
  for (const auto& [c, group] : by_case) {
    LineChart chart;
    chart.title = "Case " + std::to_string(c) + ": " + to_string(static_cast<NoiseCase>(c));
    chart.x_label = "m";
    chart.y_label = "mean ||X - X0||_F";
    chart.series = {{"RBMTLS (eps1)", "#1f77b4", {}},
                    {"RBTLS (eps2)", "#d62728", {}},
                    {"RBLS (eps3)", "#2ca02c", {}}};
    for (const SummaryRow* r : group) {
      chart.x.push_back(static_cast<double>(r->m));
      chart.series[0].y.push_back(r->eps1);
      chart.series[1].y.push_back(r->eps2);
      chart.series[2].y.push_back(r->eps3);
    }
    write(out_dir / ("case" + std::to_string(c) + ".svg"), render_svg(chart));
  }
}

}  // namespace rbq
