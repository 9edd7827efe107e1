#include "rieszwell/specfun.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "rieszwell/quadrature.hpp"

namespace rieszwell::specfun {

namespace {

bool near_nonpositive_integer(double s) noexcept {
  if (s > kPoleMargin) return false;
  return std::abs(s - std::round(s)) < kPoleMargin;
}

void require_regular(double s, const char* where) {
  if (!std::isfinite(s)) throw DomainError(std::string(where) + ": non-finite argument");
  if (near_nonpositive_integer(s)) {
    throw PoleError(std::string(where) + ": argument " + std::to_string(s) +
                    " is within 1e-6 of a pole");
  }
}

// Sign of Gamma(s) for s off the poles.
double gamma_sign(double s) noexcept {
  if (s > 0.0) return 1.0;
  return static_cast<long long>(std::floor(s)) % 2 == 0 ? 1.0 : -1.0;
}

// Gamma(s) - gamma(s, z): lower-function power series, s > 0.
Complex upper_by_series(double s, Complex z, int max_terms) {
  Complex term = 1.0 / s;
  Complex sum = term;
  double ap = s;
  int n = 0;
  for (; n < max_terms; ++n) {
    ap += 1.0;
    term *= z / ap;
    sum += term;
    if (std::abs(term) <= std::abs(sum) * 1e-17) break;
  }
  if (n == max_terms) {
    throw ConvergenceError("upper_incomplete_gamma: series did not converge", sum.real(),
                           std::abs(term));
  }
  const Complex lower = sum * std::exp(-z + s * std::log(z));
  return std::tgamma(s) - lower;
}

// Legendre continued fraction by the modified Lentz method.
Complex upper_by_fraction(double s, Complex z, int max_terms) {
  constexpr double tiny = 1e-300;
  Complex b = z + 1.0 - s;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  int i = 1;
  for (; i < max_terms; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= 1e-16) break;
  }
  if (i == max_terms) {
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge",
                           h.real(), std::abs(h));
  }
  return std::exp(-z + s * std::log(z)) * h;
}

// Series regime for any admissible order: lift negative orders to (0, 1].
Complex upper_series_lifted(double s, Complex z, int max_terms) {
  if (s > 0.0) return upper_by_series(s, z, max_terms);
  const Complex above = upper_series_lifted(s + 1.0, z, max_terms);
  return (above - std::exp(-z + s * std::log(z))) / s;
}

}  // namespace

GammaOrder::GammaOrder(double s) : s_(s), kind_(classify(s)) {
  require_regular(s, "GammaOrder");
}

GammaOrder::Kind GammaOrder::classify(double s) noexcept {
  if (near_nonpositive_integer(s)) return Kind::near_pole;
  return s > 0.0 ? Kind::positive : Kind::negative_noninteger;
}

double principal_arg(Complex z) noexcept {
  if (z.imag() == 0.0 && z.real() < 0.0) return std::numbers::pi;
  return std::atan2(z.imag(), z.real());
}

Complex principal_pow(Complex z, double s) {
  if (z == Complex{}) {
    if (s > 0.0) return {};
    throw DomainError("principal_pow: zero base with non-positive exponent");
  }
  return std::exp(s * Complex{std::log(std::abs(z)), principal_arg(z)});
}

double gamma(double s) {
  require_regular(s, "gamma");
  return std::tgamma(s);
}

double beta(double x, double y) {
  require_regular(x, "beta");
  require_regular(y, "beta");
  require_regular(x + y, "beta");
  if (std::abs(x) < 100.0 && std::abs(y) < 100.0 && std::abs(x + y) < 100.0) {
    return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
  }
  const double sign = gamma_sign(x) * gamma_sign(y) * gamma_sign(x + y);
  return sign * std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

Complex upper_incomplete_gamma(const GammaOrder& order, Complex z, int max_terms) {
  const double s = order.value();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("upper_incomplete_gamma: non-finite argument");
  }
  if (z == Complex{}) {
    if (s > 0.0) return std::tgamma(s);
    throw DomainError("upper_incomplete_gamma: z = 0 requires s > 0");
  }
  if (z.imag() == 0.0 && z.real() < 0.0) {
    throw BranchCutError("upper_incomplete_gamma: z on the negative real axis");
  }
  const double r_switch = 1.0 + std::abs(s);
  if (std::abs(z) <= r_switch) return upper_series_lifted(s, z, max_terms);
  try {
    return upper_by_fraction(s, z, max_terms);
  } catch (const ConvergenceError&) {
    // The fraction stalls close to the cut; the series converges everywhere.
    if (z.real() >= 0.0) throw;
    return upper_series_lifted(s, z, max_terms);
  }
}

Complex upper_incomplete_gamma_oracle(double s, Complex z, const QuadratureSettings& cfg) {
  cfg.validate();
  if (z == Complex{}) throw DomainError("upper_incomplete_gamma_oracle: z must be nonzero");
  if (z.real() < 0.0) throw DomainError("upper_incomplete_gamma_oracle: requires Re z >= 0");

  // Integrand varies on the scale |z| near t = 0 and decays like e^{-t}.
  const double scale = std::abs(z);
  const double t_max = 60.0 + 2.0 * std::max(0.0, s);
  std::vector<double> breaks{0.0};
  for (double b = std::min(scale, 1.0) / 16.0; b < t_max; b *= 2.0) breaks.push_back(b);
  breaks.push_back(t_max);

  auto integrand = [&](double t) { return principal_pow(z + t, s - 1.0) * std::exp(-t); };
  const auto res =
      integrate<Complex>(integrand, breaks, cfg.abs_tol, cfg.rel_tol, cfg.max_panels);
  const Complex value = std::exp(-z) * res.value;
  if (!res.converged) {
    throw ConvergenceError("upper_incomplete_gamma_oracle: quadrature budget exhausted",
                           value.real(), res.error);
  }
  return value;
}

}  // namespace rieszwell::specfun
