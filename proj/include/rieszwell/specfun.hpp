#pragma once

#include <complex>

#include "rieszwell/errors.hpp"

namespace rieszwell {

using Complex = std::complex<double>;

struct QuadratureSettings;

namespace specfun {

// Minimum distance an order may sit from a non-positive integer.
inline constexpr double kPoleMargin = 1e-6;

// Default term budget for the series and continued-fraction regimes.
inline constexpr int kMaxTerms = 500;

/// Order s of Gamma(s, z), checked against the poles at 0, -1, -2, ...
class GammaOrder {
 public:
  enum class Kind { positive, negative_noninteger, near_pole };

  /// Throws PoleError when s lies within kPoleMargin of a non-positive integer.
  explicit GammaOrder(double s);

  double value() const noexcept { return s_; }
  Kind kind() const noexcept { return kind_; }

  /// Classification without throwing; near_pole marks values the
  /// constructor rejects.
  static Kind classify(double s) noexcept;

 private:
  double s_;
  Kind kind_;
};

/// Principal argument in (-pi, pi]. Maps a signed-zero imaginary part on the
/// negative real axis to +pi.
double principal_arg(Complex z) noexcept;

/// z^s = exp(s (ln|z| + i arg z)) with arg on the principal branch.
Complex principal_pow(Complex z, double s);

double gamma(double s);
double beta(double x, double y);

/// Upper incomplete gamma Gamma(s, z) on the principal branch.
///
/// Power series for the lower function when |z| <= 1 + |s|, Legendre
/// continued fraction beyond (falling back to the series near the negative real
/// axis, where the fraction stalls). In the series regime a negative order is
/// lifted to s + 1 and brought back down with
///   Gamma(s, z) = (Gamma(s + 1, z) - z^s e^{-z}) / s.
/// Gamma(s, 0) = Gamma(s) for s > 0.
Complex upper_incomplete_gamma(const GammaOrder& s, Complex z, int max_terms = kMaxTerms);

/// Independent check: e^{-z} * integral_0^inf (z + t)^{s-1} e^{-t} dt by
/// adaptive quadrature. Requires Re z >= 0 and z != 0.
Complex upper_incomplete_gamma_oracle(double s, Complex z, const QuadratureSettings& cfg);

}  // namespace specfun
}  // namespace rieszwell
