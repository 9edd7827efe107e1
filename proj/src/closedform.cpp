#include "rieszwell/closedform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rieszwell/oracle.hpp"

namespace rieszwell {

using std::numbers::pi;

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
  if (!admissible(alpha)) {
    throw DomainError("alpha = " + std::to_string(alpha) +
                      " is outside (-1, 1) \\ {0} with margins 1e-6 at 0 and 1e-3 at +-1");
  }
}

bool FractionalOrder::admissible(double alpha) noexcept {
  return std::isfinite(alpha) && std::abs(alpha) >= kZeroMargin &&
         std::abs(alpha) <= 1.0 - kEdgeMargin;
}

void WellConfig::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(a) || !ok(amplitude) || !ok(hbar) || !ok(d_alpha)) {
    throw DomainError("WellConfig: a, A, hbar and D_alpha must be finite and positive");
  }
}

WellConfig WellConfig::normalized(double a) {
  WellConfig w;
  w.a = a;
  w.amplitude = 1.0 / std::sqrt(a);
  w.validate();
  return w;
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::closed: return "closed";
    case Method::oracle: return "oracle";
    case Method::hybrid: return "hybrid";
  }
  return "unknown";
}

std::string_view to_string(DegradeCause c) noexcept {
  switch (c) {
    case DegradeCause::none: return "none";
    case DegradeCause::boundary_cancellation: return "boundary_cancellation";
  }
  return "unknown";
}

namespace closedform {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const Complex kI{0.0, 1.0};

Complex gamma_upper(double s, Complex z) {
  return specfun::upper_incomplete_gamma(specfun::GammaOrder(s), z);
}

// Rounding bound for a sum whose terms have total magnitude `scale`.
double rounding_error(double scale) { return 16.0 * kEps * scale; }

}  // namespace

EvalResult k_closed(const FractionalOrder& order, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("k_closed: lambda must be finite and >= 0");
  }
  const double alpha = order.value();
  EvalResult out;
  if (lambda == 0.0) {
    out.value = 0.5 * pi / std::cos(0.5 * pi * alpha);
    out.err_estimate = rounding_error(out.value);
    return out;
  }
  if (lambda < kSmallLambda) {
    out = oracle::k_direct(order, lambda, QuadratureSettings{});
    return out;
  }
  const double theta = lambda + 0.5 * pi * alpha;
  const double g = specfun::gamma(alpha + 1.0);
  const Complex first = g * 0.5 * kI * std::exp(kI * theta) * gamma_upper(-alpha, kI * lambda);
  const Complex second =
      -g * 0.5 * kI * std::exp(-kI * theta) * gamma_upper(-alpha, -kI * lambda);
  const Complex k = first + second;
  if (std::abs(k.imag()) > 1e-10 * (1.0 + std::abs(k.real()))) {
    throw Error("k_closed: conjugate terms left an imaginary residue of " +
                std::to_string(k.imag()));
  }
  out.value = k.real();
  out.err_estimate = rounding_error(std::abs(first) + std::abs(second));
  return out;
}

ComplexEvalResult j_closed(const FractionalOrder& order, double lambda) {
  const double alpha = order.value();
  const Complex half_turn = std::exp(0.5 * kI * pi * alpha);
  ComplexEvalResult out;
  if (lambda >= 0.0) {
    const auto k = k_closed(order, lambda);
    out.value = -kI * half_turn * k.value;
    out.err_estimate = k.err_estimate;
    out.method = k.method;
  } else {
    const auto k = k_closed(order, -lambda);
    // Closing below encloses q = 1, passed clockwise: -2 pi i Res = -pi i e^{i lambda}.
    out.value = -pi * kI * std::exp(kI * lambda) + kI * std::conj(half_turn) * k.value;
    out.err_estimate = k.err_estimate + rounding_error(pi);
    out.method = k.method == Method::closed ? Method::closed : Method::hybrid;
  }
  return out;
}

EvalResult f_closed(const FractionalOrder& order) {
  const double alpha = order.value();
  const double prefactor = 0.25 * std::sin(0.5 * pi * alpha) * specfun::gamma(alpha + 1.0);
  const double complete = specfun::gamma(-alpha);
  const Complex upper = gamma_upper(-alpha, kI * pi);
  const Complex term = kI * std::exp(0.5 * kI * pi * alpha) * (complete - upper);
  EvalResult out;
  out.value = prefactor * 2.0 * term.real();
  out.err_estimate =
      rounding_error(std::abs(prefactor) * 2.0 * (std::abs(complete) + std::abs(upper)));
  return out;
}

EvalResult i_closed(const FractionalOrder& order, const WellConfig& well, double x) {
  well.validate();
  if (!std::isfinite(x)) throw DomainError("i_closed: x must be finite");
  const double alpha = order.value();
  const double r = std::abs(x) / well.a;

  if (r == 1.0) {
    auto f = f_closed(order);
    f.value *= 2.0;
    f.err_estimate *= 2.0;
    return f;
  }

  const double prefactor = 0.5 * std::sin(0.5 * pi * alpha) * specfun::gamma(alpha + 1.0);
  const Complex outer_phase = std::exp(0.5 * kI * pi * (r + alpha));
  const Complex far = gamma_upper(-alpha, 0.5 * kI * pi * (r + 1.0));

  EvalResult out;
  double scale = 0.0;
  if (r > 1.0) {
    const Complex near = gamma_upper(-alpha, 0.5 * kI * pi * (r - 1.0));
    const Complex bracket = outer_phase * (near - far);
    out.value = prefactor * 2.0 * bracket.real();
    scale = 2.0 * std::abs(prefactor) * (std::abs(near) + std::abs(far));
  } else {
    const Complex inner_phase = std::exp(0.5 * kI * pi * (alpha - r));
    const Complex near = gamma_upper(-alpha, 0.5 * kI * pi * (1.0 - r));
    const Complex bracket = outer_phase * far + inner_phase * near;
    const double cosine = pi * std::cos(0.5 * pi * r);
    out.value = -cosine - prefactor * 2.0 * bracket.real();
    scale = std::abs(cosine) + 2.0 * std::abs(prefactor) * (std::abs(near) + std::abs(far));
  }
  out.err_estimate = rounding_error(scale);
  if (std::abs(1.0 - r) < kBoundaryWindow) {
    out.degraded = true;
    out.cause = DegradeCause::boundary_cancellation;
  }
  return out;
}

double riesz_prefactor(const FractionalOrder& order, const WellConfig& well) {
  well.validate();
  return -(well.amplitude / pi) * std::pow(pi * well.hbar / (2.0 * well.a), order.value());
}

EvalResult riesz_psi0(const FractionalOrder& order, const WellConfig& well, double x) {
  const double c = riesz_prefactor(order, well);
  auto out = i_closed(order, well, x);
  out.value *= c;
  out.err_estimate *= std::abs(c);
  return out;
}

}  // namespace closedform
}  // namespace rieszwell
