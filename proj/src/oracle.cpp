#include "rieszwell/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace rieszwell::oracle {

using std::numbers::pi;

namespace {

double sinc(double u) noexcept {
  if (std::abs(u) < 1e-4) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

// Head mesh on [0, kTailStart]: graded toward q = 0 for the q^alpha endpoint,
// with extra breaks bracketing q = 1.
std::vector<double> head_breaks(double alpha, const QuadratureSettings& cfg) {
  const double h_min = singular_panel_width(alpha, 0.1 * cfg.abs_tol);
  auto breaks = graded_breaks(0.0, 0.5, h_min);
  for (double b : {1.0 - cfg.sing_window, 1.0, 1.0 + cfg.sing_window, 2.0, 3.0, kTailStart}) {
    if (b > breaks.back()) breaks.push_back(b);
  }
  return breaks;
}

void require_converged(const char* what, const QuadValue<double>& head,
                       const QuadValue<double>& tail, double value) {
  if (!head.converged || !tail.converged) {
    throw ConvergenceError(std::string(what) + ": tolerance not reached", value,
                           head.error + tail.error);
  }
}

}  // namespace

double stable_kernel_g(double q) noexcept {
  return -0.5 * pi * sinc(0.5 * pi * (q - 1.0)) / (q + 1.0);
}

EvalResult i_direct(const FractionalOrder& order, const WellConfig& well, double x,
                    const QuadratureSettings& cfg) {
  well.validate();
  cfg.validate();
  if (!std::isfinite(x)) throw DomainError("i_direct: x must be finite");
  const double alpha = order.value();
  const double r = std::abs(x) / well.a;

  auto head_integrand = [&](double q) {
    return 2.0 * std::pow(q, alpha) * stable_kernel_g(q) * std::cos(0.5 * pi * q * r);
  };
  const auto breaks = head_breaks(alpha, cfg);
  const auto head =
      integrate<double>(head_integrand, breaks, 0.5 * cfg.abs_tol, cfg.rel_tol, cfg.max_panels);

  // cos(pi q / 2) cos(pi q r / 2) = (cos(w1 q) + cos(w2 q)) / 2 and the factor 2
  // in front of the integral cancels the 1/2.
  const OscillatoryTailSpec spec{
      {0.5 * pi * (1.0 + r), 0.5 * pi * std::abs(1.0 - r)}, alpha - 2.0, kTailStart};
  auto amp = [alpha](double q) { return std::pow(q, alpha) / (q * q - 1.0); };
  const auto tail = oscillatory_tail(spec, amp, cfg);

  EvalResult out;
  out.value = head.value + tail.value;
  out.err_estimate = head.error + tail.error;
  out.method = Method::oracle;
  out.n_evals = head.n_evals + tail.n_evals;
  require_converged("i_direct", head, tail, out.value);
  return out;
}

EvalResult f_direct(const FractionalOrder& order, const QuadratureSettings& cfg) {
  cfg.validate();
  const double alpha = order.value();
  auto head_integrand = [&](double p) {
    const double s = sinc(0.5 * pi * (p - 1.0));
    return std::pow(p, alpha) * 0.25 * pi * pi * (p - 1.0) * s * s / (p + 1.0);
  };
  const auto breaks = head_breaks(alpha, cfg);
  const auto head =
      integrate<double>(head_integrand, breaks, 0.5 * cfg.abs_tol, cfg.rel_tol, cfg.max_panels);

  // cos^2(pi p / 2) = (1 + cos(pi p)) / 2.
  const OscillatoryTailSpec spec{{0.0, pi}, alpha - 2.0, kTailStart};
  auto amp = [alpha](double p) { return 0.5 * std::pow(p, alpha) / (p * p - 1.0); };
  const auto tail = oscillatory_tail(spec, amp, cfg);

  EvalResult out;
  out.value = head.value + tail.value;
  out.err_estimate = head.error + tail.error;
  out.method = Method::oracle;
  out.n_evals = head.n_evals + tail.n_evals;
  require_converged("f_direct", head, tail, out.value);
  return out;
}

EvalResult k_direct(const FractionalOrder& order, double lambda, const QuadratureSettings& cfg) {
  cfg.validate();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("k_direct: lambda must be finite and >= 0");
  }
  const double alpha = order.value();
  auto integrand = [&](double t) {
    return std::pow(t, alpha) * std::exp(-lambda * t) / (t * t + 1.0);
  };
  auto breaks = head_breaks(alpha, cfg);
  const auto head =
      integrate<double>(integrand, breaks, 0.5 * cfg.abs_tol, cfg.rel_tol, cfg.max_panels);
  const auto tail = algebraic_tail(integrand, kTailStart, alpha - 2.0, cfg);

  EvalResult out;
  out.value = head.value + tail.value;
  out.err_estimate = head.error + tail.error;
  out.method = Method::oracle;
  out.n_evals = head.n_evals + tail.n_evals;
  require_converged("k_direct", head, tail, out.value);
  return out;
}

}  // namespace rieszwell::oracle
