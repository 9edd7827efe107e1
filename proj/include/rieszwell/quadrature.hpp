#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "rieszwell/errors.hpp"

namespace rieszwell {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_panels = 10000;
  int tail_blocks = 200;
  int accel_depth = 12;
  double sing_window = 0.1;

  /// Throws DomainError unless every field is positive and rel_tol >= 1e-14.
  void validate() const;

  double tolerance_for(double magnitude) const {
    return std::max(abs_tol, rel_tol * std::abs(magnitude));
  }
};

template <typename T>
struct QuadValue {
  T value{};
  double error = 0.0;
  int n_evals = 0;
  bool converged = true;
};

namespace quad {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Panel {
  double lo;
  double hi;
  T value;
  double error;
};

template <typename T, typename F>
Panel<T> kronrod_panel(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fc = f(center);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const T sum = f(center - dx) + f(center + dx);
    kronrod += sum * kKronrodWeights[j];
    if (j % 2 == 1) gauss += sum * kGaussWeights[j / 2];
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <typename T>
struct ByError {
  bool operator()(const Panel<T>& a, const Panel<T>& b) const { return a.error < b.error; }
};

}  // namespace quad

/// Globally adaptive Gauss-Kronrod (7/15) over [breaks.front(), breaks.back()],
/// seeded with one panel per breakpoint interval. Bisects the worst panel until
/// the summed error estimate meets max(abs_tol, rel_tol |I|) or the panel
/// budget runs out, in which case `converged` is false.
template <typename T, typename F>
QuadValue<T> integrate(F&& f, std::span<const double> breaks, double abs_tol, double rel_tol,
                       int max_panels) {
  using P = quad::Panel<T>;
  std::priority_queue<P, std::vector<P>, quad::ByError<T>> heap;
  QuadValue<T> out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    heap.push(quad::kronrod_panel<T>(f, breaks[i], breaks[i + 1]));
    out.n_evals += 15;
  }

  auto totals = [&heap]() {
    // Fixed traversal: copy and sort by left endpoint so the sum does not
    // depend on heap layout.
    std::vector<P> panels;
    panels.reserve(heap.size());
    auto copy = heap;
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const P& a, const P& b) { return a.lo < b.lo; });
    T value{};
    double error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair<T, double>{value, error};
  };

  T running_value{};
  double running_error = 0.0;
  {
    auto [v, e] = totals();
    running_value = v;
    running_error = e;
  }
  while (!heap.empty()) {
    if (running_error <= std::max(abs_tol, rel_tol * std::abs(running_value))) break;
    if (static_cast<int>(heap.size()) >= max_panels) {
      out.converged = false;
      break;
    }
    P worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Panel cannot be split further in double precision.
      out.converged = false;
      break;
    }
    heap.pop();
    P left = quad::kronrod_panel<T>(f, worst.lo, mid);
    P right = quad::kronrod_panel<T>(f, mid, worst.hi);
    out.n_evals += 30;
    running_value += (left.value + right.value) - worst.value;
    running_error += (left.error + right.error) - worst.error;
    heap.push(left);
    heap.push(right);
  }
  auto [value, error] = totals();
  out.value = value;
  out.error = error;
  return out;
}

/// Breakpoints lo, lo + h r^k ..., graded geometrically toward `lo` so that the
/// innermost panel has width at most `min_width`.
std::vector<double> graded_breaks(double lo, double hi, double min_width);

/// Width below which a t^beta endpoint contributes less than `budget`
/// (beta > -1, unit prefactor).
double singular_panel_width(double beta, double budget);

struct Extrapolated {
  double value = 0.0;
  double error = 0.0;
};

/// Wynn's epsilon algorithm on the trailing window of `partial_sums`, using at
/// most 2*depth + 1 terms. The error is the spread between the two deepest
/// even-column estimates on the last diagonal.
Extrapolated wynn_epsilon(std::span<const double> partial_sums, int depth);

/// Describes the tail integral_start^inf amp(q) sum_j cos(w_j q) dq.
/// amp(q) must decay like q^decay_exponent with decay_exponent < -1.
struct OscillatoryTailSpec {
  std::vector<double> frequencies;
  double decay_exponent = -2.0;
  double start = 4.0;

  void validate() const;
};

/// Tail integral for one `spec`. Each nonzero frequency is integrated block by
/// block between consecutive zeros of the cosine and the partial sums are
/// accelerated; a zero frequency is mapped onto (0, 1] with q = start / t.
QuadValue<double> oscillatory_tail(const OscillatoryTailSpec& spec,
                                   const std::function<double(double)>& amp,
                                   const QuadratureSettings& cfg);

/// integral_start^inf amp(q) dq through q = start / t on a graded mesh in t.
/// `decay_exponent` sets the t = 0 grading (t^{-decay_exponent - 2}).
QuadValue<double> algebraic_tail(const std::function<double(double)>& amp, double start,
                                 double decay_exponent, const QuadratureSettings& cfg);

}  // namespace rieszwell
