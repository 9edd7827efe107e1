#include "rieszwell/analysis.hpp"

#include <cmath>
#include <numbers>

#include "rieszwell/oracle.hpp"

namespace rieszwell::analysis {

using std::numbers::pi;

double mixed_diff(double a, double b) noexcept {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

EvalResult i_hybrid(const FractionalOrder& order, const WellConfig& well, double x,
                    const QuadratureSettings& cfg) {
  well.validate();
  const double r = std::abs(x) / well.a;
  if (r != 1.0 && std::abs(1.0 - r) < closedform::kBoundaryWindow) {
    return oracle::i_direct(order, well, x, cfg);
  }
  return closedform::i_closed(order, well, x);
}

EvalResult boundary_residual(const FractionalOrder& order, const WellConfig& well) {
  return closedform::riesz_psi0(order, well, well.a);
}

MonotonicityReport monotonicity_scan(const std::vector<double>& alpha_grid,
                                     const QuadratureSettings& cfg) {
  cfg.validate();
  MonotonicityReport rep;
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1])) {
      throw DomainError("monotonicity_scan: alpha grid must be strictly increasing");
    }
    FractionalOrder order(alpha_grid[i]);
    rep.alphas.push_back(order.value());
    rep.f_values.push_back(closedform::f_closed(order).value);
  }

  const auto n = rep.alphas.size();
  const auto& a = rep.alphas;
  const auto& f = rep.f_values;
  for (std::size_t i = 0; i < n; ++i) {
    if (n < 2) break;
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
    rep.slopes.push_back((f[hi] - f[lo]) / (a[hi] - a[lo]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const bool step_ok = i + 1 == n || f[i] < f[i + 1];
    const bool slope_ok = rep.slopes.empty() || rep.slopes[i] > 0.0;
    if (!step_ok || !slope_ok) rep.violations.push_back(i);
    if ((f[i] > 0.0) != (a[i] > 0.0)) rep.sign_mismatches.push_back(i);
  }
  rep.pass = rep.violations.empty() && rep.sign_mismatches.empty();
  return rep;
}

const char* BranchChoice::analytic_half_plane() const noexcept {
  if (first != second) return "none";
  // Both cuts in one half plane leave the other one free of singularities.
  return first == CutSide::upper ? "lower" : "upper";
}

std::string BranchChoice::label() const {
  auto side = [](CutSide s) { return s == CutSide::upper ? "upper" : "lower"; };
  return std::string("first=") + side(first) + ",second=" + side(second);
}

namespace {

// arg q for real q != 0 with the cut on the positive (upper) or negative
// (lower) imaginary axis: windows (-3pi/2, pi/2] and [-pi/2, 3pi/2).
double windowed_arg(CutSide cut, double q) noexcept {
  if (q > 0.0) return 0.0;
  return cut == CutSide::upper ? -pi : pi;
}

}  // namespace

Complex continued_power(const BranchChoice& choice, double alpha, double q) {
  if (q == 0.0 || !std::isfinite(q)) {
    throw DomainError("continued_power: q must be finite and nonzero");
  }
  const double modulus = std::pow(std::abs(q), alpha);
  const Complex first =
      modulus * std::exp(Complex{0.0, alpha * (windowed_arg(choice.first, q) + 0.5 * pi)});
  const Complex second =
      modulus * std::exp(Complex{0.0, alpha * (windowed_arg(choice.second, q) - 0.5 * pi)});
  return (first + second) / (2.0 * std::cos(0.5 * pi * alpha));
}

BranchReport branch_ambiguity_demo(const FractionalOrder& order,
                                   const std::vector<double>& q_grid) {
  const double alpha = order.value();
  for (double q : q_grid) {
    if (q == 0.0) throw DomainError("branch_ambiguity_demo: q grid must exclude 0");
  }
  BranchReport rep{alpha, q_grid, {}};
  for (const auto& choice : kBranchChoices) {
    BranchDeviation dev{choice};
    for (double q : q_grid) {
      const double d = std::abs(continued_power(choice, alpha, q) - std::pow(std::abs(q), alpha));
      auto& side = q > 0.0 ? dev.positive_axis : dev.negative_axis;
      side = std::max(side, d);
    }
    dev.sup = std::max(dev.positive_axis, dev.negative_axis);
    rep.choices.push_back(dev);
  }
  return rep;
}

ConsistencyReport consistency_sweep(const std::vector<double>& alpha_list,
                                    const std::vector<double>& x_list, const WellConfig& well,
                                    const QuadratureSettings& cfg, double tolerance,
                                    Execution exec) {
  well.validate();
  cfg.validate();
  ConsistencyReport rep;
  rep.tolerance = tolerance;
  rep.points.resize(alpha_list.size() * x_list.size());
  for (std::size_t i = 0; i < alpha_list.size(); ++i) {
    for (std::size_t j = 0; j < x_list.size(); ++j) {
      auto& p = rep.points[i * x_list.size() + j];
      p.alpha = alpha_list[i];
      p.x = x_list[j];
    }
  }

  for_each_index(rep.points.size(), exec, [&](std::size_t k) {
    auto& p = rep.points[k];
    try {
      FractionalOrder order(p.alpha);
      const auto closed = i_hybrid(order, well, p.x, cfg);
      const auto direct = oracle::i_direct(order, well, p.x, cfg);
      p.closed = closed.value;
      p.closed_method = closed.method;
      p.oracle = direct.value;
      p.oracle_error = direct.err_estimate;
      p.mixed = mixed_diff(p.closed, p.oracle);
    } catch (const Error& e) {
      p.error = e.what();
    }
  });

  for (std::size_t k = 0; k < rep.points.size(); ++k) {
    const auto& p = rep.points[k];
    if (!p.error.empty()) {
      ++rep.failed_points;
      continue;
    }
    const double abs_diff = std::abs(p.closed - p.oracle);
    rep.max_abs_diff = std::max(rep.max_abs_diff, abs_diff);
    if (p.oracle != 0.0) rep.max_rel_diff = std::max(rep.max_rel_diff, abs_diff / std::abs(p.oracle));
    if (p.mixed > rep.max_mixed_diff) {
      rep.max_mixed_diff = p.mixed;
      rep.worst_index = k;
    }
  }
  rep.pass = rep.max_mixed_diff <= tolerance;
  return rep;
}

}  // namespace rieszwell::analysis
