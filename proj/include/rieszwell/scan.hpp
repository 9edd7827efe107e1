#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "rieszwell/closedform.hpp"
#include "rieszwell/parallel.hpp"
#include "rieszwell/quadrature.hpp"

namespace rieszwell::scan {

inline constexpr int kSchemaVersion = 1;

inline constexpr char kScanIHeader[] = "x,i_closed,i_oracle,abs_diff,method,degraded";
inline constexpr char kScanFHeader[] = "alpha,f_closed,f_oracle,abs_diff";

struct ScanIRow {
  double x = 0.0;
  double i_closed = 0.0;  // i_hybrid value; `method` names the route taken
  double i_oracle = 0.0;
  double abs_diff = 0.0;
  Method method = Method::closed;
  bool degraded = false;
};

struct ScanFRow {
  double alpha = 0.0;
  double f_closed = 0.0;
  double f_oracle = 0.0;
  double abs_diff = 0.0;
};

/// n evenly spaced points from lo to hi inclusive; n == 1 gives {lo}.
std::vector<double> linspace(double lo, double hi, int n);

/// linspace with every |alpha| < 1e-3 removed.
std::vector<double> alpha_grid(double lo, double hi, int n);

/// Sorted ascending. With `mirror`, -x is added for every x > 0.
std::vector<double> x_grid(double lo, double hi, int n, bool mirror);

/// Closed (hybrid) and oracle I(x) at each x. A point whose oracle misses its
/// tolerance is retried once with doubled budgets; a second failure rethrows
/// the first failing point's ConvergenceError in grid order.
std::vector<ScanIRow> scan_i(const FractionalOrder& order, const WellConfig& well,
                             const std::vector<double>& xs, const QuadratureSettings& cfg,
                             Execution exec = Execution::parallel);

std::vector<ScanFRow> scan_f(const std::vector<double>& alphas, const QuadratureSettings& cfg,
                             Execution exec = Execution::parallel);

/// 17 significant digits, '.' decimal point, no locale.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<ScanIRow>& rows);
void write_csv(std::ostream& os, const std::vector<ScanFRow>& rows);

nlohmann::json to_json(const std::vector<ScanIRow>& rows);
nlohmann::json to_json(const std::vector<ScanFRow>& rows);
nlohmann::json to_json(const EvalResult& r);

}  // namespace rieszwell::scan
