#pragma once

#include <string_view>

#include "rieszwell/quadrature.hpp"
#include "rieszwell/specfun.hpp"

namespace rieszwell {

/// Exponent alpha of the Riesz derivative, restricted to (-1, 1) minus a
/// 1e-6 neighbourhood of 0 and 1e-3 neighbourhoods of +-1.
class FractionalOrder {
 public:
  static constexpr double kZeroMargin = 1e-6;
  static constexpr double kEdgeMargin = 1e-3;

  explicit FractionalOrder(double alpha);

  double value() const noexcept { return alpha_; }

  static bool admissible(double alpha) noexcept;

 private:
  double alpha_;
};

/// Infinite well of half-width a with ground-state amplitude A, in units where
/// hbar and D_alpha default to 1.
struct WellConfig {
  double a = 1.0;
  double amplitude = 1.0;
  double hbar = 1.0;
  double d_alpha = 1.0;

  void validate() const;

  /// A = a^{-1/2}, so the candidate state has unit norm.
  static WellConfig normalized(double a);
};

enum class Method { closed, oracle, hybrid };
enum class DegradeCause { none, boundary_cancellation };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(DegradeCause c) noexcept;

template <typename T>
struct BasicEvalResult {
  T value{};
  double err_estimate = 0.0;
  Method method = Method::closed;
  bool degraded = false;
  DegradeCause cause = DegradeCause::none;
  int n_evals = 0;
};

using EvalResult = BasicEvalResult<double>;
using ComplexEvalResult = BasicEvalResult<Complex>;

namespace closedform {

// Below this lambda, K is taken from direct quadrature instead of the
// incomplete-gamma expression.
inline constexpr double kSmallLambda = 0.01;

// |1 - |x|/a| below this marks the boundary cancellation window.
inline constexpr double kBoundaryWindow = 1e-4;

/// K(lambda) = integral_0^inf t^alpha e^{-lambda t} / (t^2 + 1) dt for lambda >= 0.
EvalResult k_closed(const FractionalOrder& order, double lambda);

/// J(lambda) = integral over the contour detouring clockwise around q = 1 of
/// q^alpha e^{i lambda q} / (q^2 - 1):
///   lambda >= 0:  -i e^{i pi alpha / 2} K(lambda)
///   lambda <  0:  -pi i e^{i lambda} + i e^{-i pi alpha / 2} K(-lambda)
ComplexEvalResult j_closed(const FractionalOrder& order, double lambda);

/// I(x) = 2 integral_0^inf q^alpha cos(pi q / 2) cos(pi q x / 2a) / (q^2 - 1) dq,
/// even in x. Flagged degraded inside the boundary window; exactly 2 f at |x| = a.
EvalResult i_closed(const FractionalOrder& order, const WellConfig& well, double x);

/// f(alpha) = integral_0^inf p^alpha cos^2(pi p / 2) / (p^2 - 1) dp = I(a) / 2.
EvalResult f_closed(const FractionalOrder& order);

/// Riesz derivative of the candidate ground state A cos(pi x / 2a) on [-a, a]:
/// -(A / pi) (pi hbar / 2a)^alpha I(x).
EvalResult riesz_psi0(const FractionalOrder& order, const WellConfig& well, double x);

/// -(A / pi) (pi hbar / 2a)^alpha, the factor between I(x) and the Riesz derivative.
double riesz_prefactor(const FractionalOrder& order, const WellConfig& well);

}  // namespace closedform
}  // namespace rieszwell
