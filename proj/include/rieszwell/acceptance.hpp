#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rieszwell/quadrature.hpp"

namespace rieszwell::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst observed value of the gated quantity
  double tolerance = 0.0;  // bound the measured value is compared with
  double runtime_s = 0.0;
  double runtime_limit_s = 0.0;
  std::string detail;
};

struct Options {
  // Settings for the I, f and K oracles. Each criterion tightens them to two
  // decades below its own gate, so loosening them cannot fail a criterion.
  QuadratureSettings cfg{};
  // Extra alpha at which the boundary residual must be nonzero.
  std::optional<double> probe_alpha;
};

struct Report {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

/// Runs the ten acceptance criteria (plus the probe, if set) in order.
Report run(const Options& opts);

nlohmann::json to_json(const Report& report);

}  // namespace rieszwell::acceptance
