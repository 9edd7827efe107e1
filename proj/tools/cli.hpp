#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rieszwell::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kConvergence = 3 };

/// Everything a subcommand needs, filled from flags and validated before any
/// evaluation starts. Runs are fully deterministic; there is no seed.
struct RunConfig {
  std::string subcommand;
  double alpha = 0.5;
  double a = 1.0;
  double x = 0.0;
  double x_min = 0.0;
  double x_max = 3.0;
  int points = 301;
  double alpha_min = -0.9;
  double alpha_max = 0.9;
  double rel_tol = 1e-8;
  int max_panels = 10000;
  std::string format = "csv";
  std::string out_path = "-";
  bool mirror = false;
  bool alpha_set = false;
  // gamma-inc
  double s = -0.5;
  double z_re = 0.0;
  double z_im = 1.0;
  // branch-demo
  std::vector<double> q_grid{-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};

  /// Throws DomainError on empty ranges, points < 1, unknown format, or an
  /// alpha outside the admissible domain for commands that take one.
  void validate() const;
};

/// Entry point shared by the executable and the tests. Writes records to
/// `out` (or the --out file) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rieszwell::cli
