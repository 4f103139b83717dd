// rbq: solve reduced-biquaternion AX ~ B problems and run the randomized
// error-comparison experiment.
//
//   rbq experiment --case 1 --m-list 90,110,130,150 --n 50 --n1 20 --d 35 \
//                  --trials 20 --noise 0.01 --seed 42 --out DIR
//   rbq solve --input problem.rbq --method mtls --n1 K --out solution.csv
//
// Exit codes: 0 success, 1 invalid input or rank-deficient exact block,
// 2 no unique solution, 3 I/O or file-format error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rbq/errors.hpp"
#include "rbq/experiment.hpp"
#include "rbq/io.hpp"
#include "rbq/solvers.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitNonUnique = 2;
constexpr int kExitIo = 3;

int run_experiment_command(const rbq::ExperimentConfig& cfg, const std::string& out_dir) {
  const auto rows = rbq::run_experiment(cfg);
  rbq::emit_outputs(rows, out_dir);
  std::cout << rbq::results_csv(rows);
  return 0;
}

int run_solve_command(const std::string& input, const std::string& method, long long n1,
                      const std::string& out) {
  auto [a, b] = rbq::read_problem_file(input);
  rbq::MTLSSolution s;
  if (method == "mtls") {
    if (n1 < 0) throw std::invalid_argument("--n1 is required for --method mtls");
    s = rbq::solve_mtls(rbq::MTLSProblem{a, b, static_cast<rbq::Index>(n1)});
  } else if (method == "tls") {
    s = rbq::solve_tls(a, b);
  } else {
    s = rbq::solve_ls(a, b);
  }
  rbq::write_matrix_csv(out, s.x);

  const auto& diag = s.diagnostics;
  std::cout << "method: " << method << '\n'
            << "correction_norm: " << rbq::format_double(s.correction_norm) << '\n'
            << "sigma_n2: " << rbq::format_double(diag.sigma_n2) << '\n'
            << "sigma_n2_plus_1: " << rbq::format_double(diag.sigma_n2_plus_1) << '\n'
            << "v22_min_singular: " << rbq::format_double(diag.v22_min_singular) << '\n'
            << "unique: " << (diag.unique ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least squares, total least squares and mixed LS-TLS over reduced biquaternions"};
  app.require_subcommand(1);

  rbq::ExperimentConfig cfg;
  int noise_case = 1;
  std::string out_dir;
  auto* experiment = app.add_subcommand("experiment", "Randomized error comparison of the three solvers");
  experiment->add_option("--case", noise_case, "1: noisy Ab and B, 2: noisy A and B, 3: noisy B")
      ->check(CLI::IsMember({1, 2, 3}))
      ->required();
  experiment->add_option("--m-list", cfg.m_values, "Row counts")->delimiter(',');
  experiment->add_option("--n", cfg.n, "Columns of A");
  experiment->add_option("--n1", cfg.n1, "Exactly known leading columns");
  experiment->add_option("--d", cfg.d, "Right-hand sides");
  experiment->add_option("--trials", cfg.trials, "Trials per m");
  experiment->add_option("--noise", cfg.noise_scale, "Noise scale");
  experiment->add_option("--seed", cfg.seed, "Base seed");
  experiment->add_option("--out", out_dir, "Output directory")->required();

  std::string input;
  std::string method;
  long long n1 = -1;
  std::string solution_out;
  auto* solve = app.add_subcommand("solve", "Solve one problem file");
  solve->add_option("--input", input, "Problem file (two rbq containers: A then B)")->required();
  solve->add_option("--method", method, "mtls, tls or ls")
      ->check(CLI::IsMember({"mtls", "tls", "ls"}))
      ->required();
  solve->add_option("--n1", n1, "Exactly known leading columns (mtls)");
  solve->add_option("--out", solution_out, "Solution CSV (n x d)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*experiment) {
      cfg.noise_case = static_cast<rbq::NoiseCase>(noise_case);
      return run_experiment_command(cfg, out_dir);
    }
    return run_solve_command(input, method, n1, solution_out);
  } catch (const rbq::SolveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == rbq::SolveErrorKind::NonUniqueGap ||
                   e.kind() == rbq::SolveErrorKind::NonUniqueV22
               ? kExitNonUnique
               : kExitInvalid;
  } catch (const rbq::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}
