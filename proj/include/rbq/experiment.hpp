#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rbq/matrix.hpp"
#include "rbq/solvers.hpp"

namespace rbq {

/// Where the 0.01-scaled correlated uniform noise goes.
enum class NoiseCase {
  RhsAndSubset = 1,  // noisy Ab and B; Aa exact
  AllColumns = 2,    // noisy Aa, Ab and B
  RhsOnly = 3,       // noisy B only
};

const char* to_string(NoiseCase c);

struct ExperimentConfig {
  std::vector<Index> m_values{90, 110, 130, 150};
  Index n = 50;
  Index n1 = 20;
  Index d = 35;
  int trials = 20;
  double noise_scale = 0.01;
  NoiseCase noise_case = NoiseCase::RhsAndSubset;
  std::uint64_t seed = 42;

  Index n2() const { return n - n1; }
  /// Throws std::invalid_argument unless every m >= n + d, 0 <= n1 <= n,
  /// d >= 1 and trials >= 1.
  void validate() const;
};

struct Instance {
  MTLSProblem problem;  // A = [Aa, Ab], B, n1 = cfg.n1
  Matrix x0;            // exact solution of the noiseless system
};

/// F with standard-normal components, X0 standard normal, G = F X0, plus
/// noise E = scale * (U(m, w) U(w, w)) with uniform U, the same real slice of
/// E going into all four components of each noise block. w = n2 + d, n + d or
/// d depending on the case.
Instance generate_instance(const ExperimentConfig& cfg, Index m, std::uint64_t trial_seed);

/// FNV-1a over the raw bytes of A and B.
std::uint64_t instance_hash(const MTLSProblem& p);

struct TrialResult {
  Index m = 0;
  NoiseCase noise_case = NoiseCase::RhsAndSubset;
  double eps1 = 0.0;  // mixed
  double eps2 = 0.0;  // total
  double eps3 = 0.0;  // ordinary
  SolvabilityReport mtls;
  SolvabilityReport tls;
  SolvabilityReport ls;
  bool skipped = false;
  std::string skip_reason;
};

/// Solves one instance with all three methods. A solver failure marks the
/// whole trial skipped so that averages stay paired.
TrialResult run_trial(const ExperimentConfig& cfg, Index m, int trial);

struct SummaryRow {
  Index m = 0;
  NoiseCase noise_case = NoiseCase::RhsAndSubset;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3 = 0.0;
  int skipped = 0;
};

/// Mean errors over the non-skipped trials, one row per m in cfg order.
/// Trials run in parallel; the output does not depend on scheduling.
std::vector<SummaryRow> run_experiment(const ExperimentConfig& cfg);

/// Writes results.csv (m,case,eps1,eps2,eps3,skipped) and one caseN.svg
/// chart per case present. Throws IoError.
void emit_outputs(const std::vector<SummaryRow>& rows, const std::filesystem::path& out_dir);

std::string results_csv(const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> read_results_csv(const std::filesystem::path& path);

}  // namespace rbq
