#include "rieszwell/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "rieszwell/analysis.hpp"
#include "rieszwell/closedform.hpp"
#include "rieszwell/oracle.hpp"
#include "rieszwell/scan.hpp"
#include "rieszwell/specfun.hpp"

namespace rieszwell::acceptance {

using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  double measured = 0.0;
  std::string detail;
};

// Oracle settings for a criterion gated at `gate`: the caller's settings,
// tightened so the oracle's own tolerance sits two decades below the gate.
QuadratureSettings for_gate(const QuadratureSettings& cfg, double gate) {
  QuadratureSettings c = cfg;
  c.rel_tol = std::max(1e-14, std::min(cfg.rel_tol, 1e-2 * gate));
  c.abs_tol = std::min(cfg.abs_tol, 1e-2 * gate);
  return c;
}

CriterionResult timed(int id, std::string name, double tolerance, double limit_s,
                      const std::function<Outcome()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.tolerance = tolerance;
  r.runtime_limit_s = limit_s;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::nan(""), std::string("exception: ") + e.what()};
  }
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.measured = o.measured;
  r.detail = o.detail;
  r.pass = o.pass && r.runtime_s <= limit_s;
  if (o.pass && !r.pass) r.detail += " (runtime limit exceeded)";
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Complex gamma_upper(double s, Complex z) {
  return specfun::upper_incomplete_gamma(specfun::GammaOrder(s), z);
}

Outcome k_zero_identity() {
  double worst = 0.0;
  for (double alpha : {-0.75, -0.5, -0.25, 0.25, 0.5, 0.75}) {
    FractionalOrder order(alpha);
    const double expected = 0.5 * pi / std::cos(0.5 * pi * alpha);
    const double k0 = closedform::k_closed(order, 0.0).value;
    // Second route: K(0) = B(1/2 - alpha/2, 1/2 + alpha/2) / 2.
    const double via_beta = 0.5 * specfun::beta(0.5 - 0.5 * alpha, 0.5 + 0.5 * alpha);
    worst = std::max({worst, std::abs(k0 - expected), std::abs(via_beta - expected)});
  }
  return {worst <= 1e-12, worst, "max |K(0) - (pi/2) sec(pi alpha/2)| incl. Beta route"};
}

Outcome gamma_recurrence() {
  std::mt19937_64 rng(20120425);
  std::uniform_real_distribution<double> order_dist(-0.95, 0.95);
  std::uniform_real_distribution<double> lambda_dist(0.05, 20.0);
  QuadratureSettings ray;
  ray.rel_tol = 1e-13;
  ray.abs_tol = 1e-15;
  double worst_rec = 0.0;
  double worst_ray = 0.0;
  for (int n = 0; n < 200;) {
    const double s = order_dist(rng);
    const double lambda = lambda_dist(rng);
    if (std::abs(s) < 0.05) continue;
    ++n;
    const Complex z{0.0, lambda};
    const Complex g = gamma_upper(s, z);
    const Complex g1 = gamma_upper(s + 1.0, z);
    const Complex rhs = s * g + specfun::principal_pow(z, s) * std::exp(-z);
    worst_rec = std::max(worst_rec, std::abs(g1 - rhs) / std::max(1.0, std::abs(g1)));
    const Complex o = specfun::upper_incomplete_gamma_oracle(s, z, ray);
    worst_ray = std::max(worst_ray, std::abs(g - o) / std::max(1.0, std::abs(o)));
  }
  const bool pass = worst_rec <= 1e-10 && worst_ray <= 1e-9;
  return {pass, worst_rec,
          "recurrence residual " + fmt(worst_rec) + " (tol 1e-10), ray oracle " + fmt(worst_ray) +
              " (tol 1e-9)"};
}

Outcome k_closed_vs_direct(const QuadratureSettings& cfg) {
  double worst = 0.0;
  for (double alpha : {-0.5, -0.25, 0.25, 0.5, 0.75}) {
    FractionalOrder order(alpha);
    for (double lambda : {0.05, 0.5, 1.0, 0.5 * pi, pi, 5.0}) {
      const double c = closedform::k_closed(order, lambda).value;
      const double d = oracle::k_direct(order, lambda, cfg).value;
      worst = std::max(worst, analysis::mixed_diff(c, d));
    }
  }
  return {worst <= 1e-8, worst, "max mixed |K_closed - K_direct| over 30 points"};
}

Outcome i_closed_vs_oracle(const QuadratureSettings& cfg) {
  const auto rep = analysis::consistency_sweep({-0.5, 0.25, 0.5, 0.75},
                                               {0.0, 0.25, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0},
                                               WellConfig{}, cfg, 1e-6);
  const auto& w = rep.points[rep.worst_index];
  return {rep.pass && rep.failed_points == 0, rep.max_mixed_diff,
          "32 points, " + std::to_string(rep.failed_points) + " failed, worst at alpha=" +
              fmt(w.alpha) + " x=" + fmt(w.x)};
}

Outcome identity_limit(const QuadratureSettings& cfg) {
  FractionalOrder order(1e-4);
  const WellConfig well;
  double worst = 0.0;
  for (double r : {0.0, 0.3, 0.6, 0.9}) {
    const double target = -pi * std::cos(0.5 * pi * r);
    worst = std::max(worst, std::abs(analysis::i_hybrid(order, well, r, cfg).value - target));
    worst = std::max(worst, std::abs(oracle::i_direct(order, well, r, cfg).value - target));
  }
  worst = std::max(worst, std::abs(analysis::i_hybrid(order, well, 2.0, cfg).value));
  worst = std::max(worst, std::abs(oracle::i_direct(order, well, 2.0, cfg).value));
  return {worst <= 5e-3, worst, "alpha=1e-4, both routes, x/a in {0,0.3,0.6,0.9} and 2"};
}

Outcome boundary_nonvanishing(const QuadratureSettings& cfg) {
  FractionalOrder order(0.5);
  const WellConfig well;
  const double closed = analysis::i_hybrid(order, well, 1.0, cfg).value;
  const double direct = oracle::i_direct(order, well, 1.0, cfg).value;
  const auto residual = analysis::boundary_residual(order, well);
  const double diff = analysis::mixed_diff(closed, direct);
  const bool pass = std::abs(closed) > 0.1 && std::abs(direct) > 0.1 && diff <= 1e-6 &&
                    std::abs(residual.value) > 10.0 * residual.err_estimate &&
                    residual.value != 0.0;
  return {pass, diff,
          "I(1) closed=" + fmt(closed) + " oracle=" + fmt(direct) +
              " residual=" + fmt(residual.value)};
}

Outcome monotone_f(const QuadratureSettings& cfg) {
  const auto rep = analysis::monotonicity_scan(scan::alpha_grid(-0.9, 0.9, 73), cfg);
  double worst = 0.0;
  for (double alpha : {-0.5, 0.5, 0.25}) {
    FractionalOrder order(alpha);
    worst = std::max(worst, analysis::mixed_diff(closedform::f_closed(order).value,
                                                 oracle::f_direct(order, cfg).value));
  }
  return {rep.pass && worst <= 1e-7, worst,
          std::to_string(rep.alphas.size()) + " grid points, " +
              std::to_string(rep.violations.size()) + " monotonicity violations, " +
              std::to_string(rep.sign_mismatches.size()) + " sign mismatches"};
}

Outcome boundary_continuity() {
  const WellConfig well;
  double worst_factor = 0.0;
  std::string detail;
  for (double alpha : {0.25, 0.5}) {
    FractionalOrder order(alpha);
    const double boundary = closedform::i_closed(order, well, 1.0).value;
    auto inside = [&](double d) {
      return std::abs(closedform::i_closed(order, well, 1.0 - d).value - boundary);
    };
    auto outside = [&](double d) {
      return std::abs(closedform::i_closed(order, well, 1.0 + d).value - boundary);
    };
    auto across = [&](double d) {
      return std::abs(closedform::i_closed(order, well, 1.0 - d).value -
                      closedform::i_closed(order, well, 1.0 + d).value);
    };
    const double expected = std::pow(10.0, 1.0 - alpha);
    const double r_in = inside(1e-2) / inside(1e-3);
    const double r_out = outside(1e-2) / outside(1e-3);
    for (double r : {r_in, r_out}) {
      worst_factor = std::max(worst_factor, std::max(r / expected, expected / r));
    }
    detail += "alpha=" + fmt(alpha) + ": ratios in=" + fmt(r_in) + " out=" + fmt(r_out) +
              " expected=" + fmt(expected) +
              " (symmetric gap ratio=" + fmt(across(1e-2) / across(1e-3)) + "); ";
  }
  return {worst_factor <= 3.0, worst_factor, detail};
}

Outcome branch_demo() {
  FractionalOrder order(0.5);
  const auto rep = analysis::branch_ambiguity_demo(order, {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0});
  bool pass = true;
  double mixed_dev = 0.0;
  std::string detail;
  for (const auto& c : rep.choices) {
    const std::string plane = c.choice.analytic_half_plane();
    if (c.choice.first == analysis::CutSide::upper && c.choice.second == analysis::CutSide::lower) {
      mixed_dev = c.sup;
      pass = pass && c.sup <= 1e-12;
    } else if (plane != "none") {
      const double hi = std::max(c.positive_axis, c.negative_axis);
      const double lo = std::min(c.positive_axis, c.negative_axis);
      pass = pass && hi >= 1.0 && lo <= 1e-12;
    }
    detail += c.choice.label() + " dev+=" + fmt(c.positive_axis) + " dev-=" +
              fmt(c.negative_axis) + "; ";
  }
  return {pass, mixed_dev, detail};
}

Outcome deterministic_scan(const QuadratureSettings& cfg) {
  FractionalOrder order(0.5);
  const WellConfig well;
  const auto xs = scan::x_grid(0.0, 3.0, 301, false);
  std::ostringstream first, second;
  scan::write_csv(first, scan::scan_i(order, well, xs, cfg));
  scan::write_csv(second, scan::scan_i(order, well, xs, cfg));
  const bool same = first.str() == second.str();
  return {same, same ? 0.0 : 1.0,
          "default scan-i preset (alpha 0.5, 301 points on [0, 3]), " + std::to_string(first.str().size()) + " bytes per run"};
}

}  // namespace

Report run(const Options& opts) {
  const auto& cfg = opts.cfg;
  cfg.validate();
  Report rep;
  auto& c = rep.criteria;
  c.push_back(timed(1, "K(0) identity", 1e-12, 1.0, k_zero_identity));
  c.push_back(timed(2, "incomplete gamma recurrence and ray oracle", 1e-10, 10.0,
                    gamma_recurrence));
  c.push_back(timed(3, "K closed vs direct", 1e-8, 10.0, [&] { return k_closed_vs_direct(for_gate(cfg, 1e-8)); }));
  c.push_back(timed(4, "I closed vs oracle", 1e-6, 120.0, [&] { return i_closed_vs_oracle(for_gate(cfg, 1e-6)); }));
  c.push_back(timed(5, "alpha -> 0 identity limit", 5e-3, 30.0,
                    [&] { return identity_limit(for_gate(cfg, 5e-3)); }));
  c.push_back(timed(6, "non-vanishing boundary value", 1e-6, 5.0,
                    [&] { return boundary_nonvanishing(for_gate(cfg, 1e-6)); }));
  c.push_back(timed(7, "monotone f", 1e-7, 30.0, [&] { return monotone_f(for_gate(cfg, 1e-7)); }));
  c.push_back(timed(8, "piecewise continuity at x = a", 3.0, 5.0, boundary_continuity));
  c.push_back(timed(9, "branch ambiguity demo", 1e-12, 1.0, branch_demo));
  c.push_back(timed(10, "deterministic scan-i", 0.0, 60.0,
                    [&] { return deterministic_scan(cfg); }));
  if (opts.probe_alpha) {
    const double alpha = *opts.probe_alpha;
    c.push_back(timed(11, "probe boundary residual", 0.0, 5.0, [&] {
      const auto r = analysis::boundary_residual(FractionalOrder(alpha), WellConfig{});
      return Outcome{r.value != 0.0, std::abs(r.value), "alpha=" + fmt(alpha)};
    }));
  }
  rep.all_pass = true;
  for (const auto& r : c) rep.all_pass = rep.all_pass && r.pass;
  return rep;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : report.criteria) {
    items.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"measured", r.measured},
                     {"tolerance", r.tolerance},
                     {"runtime_s", r.runtime_s},
                     {"runtime_limit_s", r.runtime_limit_s},
                     {"detail", r.detail}});
  }
  return {{"schema", 1}, {"all_pass", report.all_pass}, {"criteria", items}};
}

}  // namespace rieszwell::acceptance
