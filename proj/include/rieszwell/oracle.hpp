#pragma once

#include "rieszwell/closedform.hpp"
#include "rieszwell/quadrature.hpp"

namespace rieszwell::oracle {

// Split point between the finite head integral and the accelerated tail.
inline constexpr double kTailStart = 4.0;

/// cos(pi q / 2) / (q^2 - 1) written as -(pi/2) sinc(pi (q - 1) / 2) / (q + 1),
/// which is smooth through q = 1.
double stable_kernel_g(double q) noexcept;

/// I(x) by direct quadrature: graded head on [0, 4], two-frequency tail with
/// epsilon acceleration. Throws ConvergenceError if the tolerance is missed.
EvalResult i_direct(const FractionalOrder& order, const WellConfig& well, double x,
                    const QuadratureSettings& cfg);

/// f(alpha) by direct quadrature of the pole-free cos^2 form.
EvalResult f_direct(const FractionalOrder& order, const QuadratureSettings& cfg);

/// K(lambda) by direct quadrature; the tail beyond t = 4 is mapped onto (0, 1].
EvalResult k_direct(const FractionalOrder& order, double lambda, const QuadratureSettings& cfg);

}  // namespace rieszwell::oracle
