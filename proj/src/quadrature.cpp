#include "rieszwell/quadrature.hpp"

#include <limits>
#include <numbers>

namespace rieszwell {

void QuadratureSettings::validate() const {
  if (!(rel_tol >= 1e-14) || !(abs_tol > 0.0) || max_panels <= 0 || tail_blocks <= 0 ||
      accel_depth <= 0 || !(sing_window > 0.0)) {
    throw DomainError("QuadratureSettings: fields must be positive and rel_tol >= 1e-14");
  }
}

std::vector<double> graded_breaks(double lo, double hi, double min_width) {
  std::vector<double> inner;
  double w = hi - lo;
  while (w > std::numeric_limits<double>::min()) {
    inner.push_back(lo + w);
    if (w <= min_width) break;
    w *= 0.25;
  }
  std::vector<double> breaks{lo};
  breaks.insert(breaks.end(), inner.rbegin(), inner.rend());
  if (breaks.back() < hi) breaks.push_back(hi);
  return breaks;
}

double singular_panel_width(double beta, double budget) {
  if (beta >= 0.0 && beta == std::floor(beta)) return 1e-3;
  const double width = std::pow(budget * (beta + 1.0), 1.0 / (beta + 1.0));
  return std::clamp(width, 1e-280, 1e-3);
}

Extrapolated wynn_epsilon(std::span<const double> partial_sums, int depth) {
  const std::size_t window = std::min<std::size_t>(partial_sums.size(), 2 * depth + 1);
  if (window == 0) return {};
  const auto seq = partial_sums.subspan(partial_sums.size() - window);
  if (window < 3) {
    const double last = seq.back();
    const double spread = window == 2 ? std::abs(seq[1] - seq[0]) : std::abs(last);
    return {last, spread};
  }

  // prev = column j-1, cur = column j; column j has (window - j) entries.
  std::vector<double> prev(window + 1, 0.0);
  std::vector<double> cur(seq.begin(), seq.end());
  // Last-diagonal entries of the even columns, shallowest first.
  std::vector<double> diag{cur.back()};
  for (std::size_t j = 0; j + 1 < window; ++j) {
    std::vector<double> next(cur.size() - 1);
    bool degenerate = false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const double delta = cur[k + 1] - cur[k];
      if (delta == 0.0 || !std::isfinite(1.0 / delta)) {
        degenerate = true;
        break;
      }
      next[k] = prev[k + 1] + 1.0 / delta;
    }
    if (degenerate) break;
    prev = std::move(cur);
    cur = std::move(next);
    if ((j + 1) % 2 == 0) diag.push_back(cur.back());
  }
  if (diag.size() == 1) return {diag[0], std::abs(seq.back() - seq[seq.size() - 2])};
  const double best = diag.back();
  return {best, std::abs(best - diag[diag.size() - 2])};
}

void OscillatoryTailSpec::validate() const {
  if (!(decay_exponent < -1.0)) {
    throw DomainError("OscillatoryTailSpec: decay exponent must be below -1");
  }
  if (!(start > 0.0)) throw DomainError("OscillatoryTailSpec: start must be positive");
  for (double w : frequencies) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("OscillatoryTailSpec: frequencies must be finite and non-negative");
    }
  }
}

QuadValue<double> algebraic_tail(const std::function<double(double)>& amp, double start,
                                 double decay_exponent, const QuadratureSettings& cfg) {
  const double beta = -decay_exponent - 2.0;
  const double h_min = singular_panel_width(beta, 0.1 * cfg.abs_tol);
  const auto breaks = graded_breaks(0.0, 1.0, h_min);
  auto mapped = [&](double t) {
    const double q = start / t;
    const double v = amp(q) * (start / t) / t;
    return std::isfinite(v) ? v : 0.0;
  };
  return integrate<double>(mapped, breaks, 0.5 * cfg.abs_tol, 0.5 * cfg.rel_tol,
                           cfg.max_panels);
}

namespace {

QuadValue<double> single_frequency_tail(double omega, double start,
                                        const std::function<double(double)>& amp,
                                        const QuadratureSettings& cfg) {
  using std::numbers::pi;
  const double half_period = pi / omega;
  // First zero of cos(omega q) at or beyond `start`.
  const double k0 = std::ceil(start * omega / pi - 0.5);
  double edge = (k0 + 0.5) * half_period;

  QuadValue<double> out;
  auto f = [&](double q) { return amp(q) * std::cos(omega * q); };
  const double block_abs = 0.01 * cfg.abs_tol;
  const double block_rel = 0.01 * cfg.rel_tol;

  // The lead-in block can be very long when omega is small; grade it
  // geometrically away from `start`.
  std::vector<double> lead{start};
  for (double b = 2.0 * start; b < edge; b *= 2.0) lead.push_back(b);
  lead.push_back(edge);
  auto first = integrate<double>(f, lead, block_abs, block_rel, cfg.max_panels);
  out.n_evals += first.n_evals;
  double block_error = first.error;
  bool blocks_ok = first.converged;

  std::vector<double> partial{first.value};
  Extrapolated best{first.value, std::abs(first.value)};
  double previous = first.value;
  constexpr int kMinBlocks = 6;
  bool done = false;
  for (int n = 1; n < cfg.tail_blocks; ++n) {
    const double lo = edge;
    edge = lo + half_period;
    const std::array<double, 2> br{lo, edge};
    auto block = integrate<double>(f, br, block_abs, block_rel, cfg.max_panels);
    out.n_evals += block.n_evals;
    block_error += block.error;
    blocks_ok = blocks_ok && block.converged;
    partial.push_back(partial.back() + block.value);

    const Extrapolated est = wynn_epsilon(partial, cfg.accel_depth);
    const double drift = std::abs(est.value - previous);
    previous = est.value;
    best = {est.value, std::max(est.error, drift)};
    if (n + 1 >= kMinBlocks && best.error <= 0.1 * cfg.tolerance_for(best.value)) {
      done = true;
      break;
    }
  }
  out.value = best.value;
  out.error = best.error + block_error;
  out.converged = done && blocks_ok;
  return out;
}

}  // namespace

QuadValue<double> oscillatory_tail(const OscillatoryTailSpec& spec,
                                   const std::function<double(double)>& amp,
                                   const QuadratureSettings& cfg) {
  spec.validate();
  QuadValue<double> out;
  for (double omega : spec.frequencies) {
    const auto part = omega == 0.0 ? algebraic_tail(amp, spec.start, spec.decay_exponent, cfg)
                                   : single_frequency_tail(omega, spec.start, amp, cfg);
    out.value += part.value;
    out.error += part.error;
    out.n_evals += part.n_evals;
    out.converged = out.converged && part.converged;
  }
  return out;
}

}  // namespace rieszwell
