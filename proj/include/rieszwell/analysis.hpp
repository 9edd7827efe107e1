#pragma once

#include <array>
#include <string>
#include <vector>

#include "rieszwell/closedform.hpp"
#include "rieszwell/parallel.hpp"
#include "rieszwell/quadrature.hpp"

namespace rieszwell::analysis {

/// |a - b| / max(1, |b|): absolute for small values, relative for large ones.
double mixed_diff(double a, double b) noexcept;

/// Closed form away from |x| = a, direct quadrature inside the cancellation
/// window, and the exact boundary value 2 f(alpha) at |x| = a.
EvalResult i_hybrid(const FractionalOrder& order, const WellConfig& well, double x,
                    const QuadratureSettings& cfg);

/// Riesz derivative of the candidate state at x = a. It would vanish if the
/// candidate solved the well problem.
EvalResult boundary_residual(const FractionalOrder& order, const WellConfig& well);

struct MonotonicityReport {
  std::vector<double> alphas;
  std::vector<double> f_values;
  // Centred differences at interior points, one-sided at the ends.
  std::vector<double> slopes;
  // Grid indices i where f[i] >= f[i + 1] or the slope is not positive.
  std::vector<std::size_t> violations;
  std::vector<std::size_t> sign_mismatches;
  bool pass = true;
};

/// f_closed on a strictly increasing alpha grid. Throws DomainError for an
/// unordered grid or an inadmissible alpha.
MonotonicityReport monotonicity_scan(const std::vector<double>& alpha_grid,
                                     const QuadratureSettings& cfg);

enum class CutSide { upper, lower };

/// Where the branch cuts of (iq)^alpha and (-iq)^alpha are placed in the q plane.
struct BranchChoice {
  CutSide first;
  CutSide second;

  /// Half plane where both terms are analytic, if the cuts share a side.
  const char* analytic_half_plane() const noexcept;
  std::string label() const;
};

inline constexpr std::array<BranchChoice, 4> kBranchChoices = {{
    {CutSide::upper, CutSide::lower},
    {CutSide::lower, CutSide::upper},
    {CutSide::upper, CutSide::upper},
    {CutSide::lower, CutSide::lower},
}};

/// [(iq)^alpha + (-iq)^alpha] / (2 cos(pi alpha / 2)) for real q != 0 under `choice`.
Complex continued_power(const BranchChoice& choice, double alpha, double q);

struct BranchDeviation {
  BranchChoice choice;
  double positive_axis = 0.0;  // sup |value - |q|^alpha| over q > 0
  double negative_axis = 0.0;  // same over q < 0
  double sup = 0.0;
};

struct BranchReport {
  double alpha = 0.0;
  std::vector<double> q_grid;
  std::vector<BranchDeviation> choices;
};

/// Evaluates every BranchChoice on the grid. Throws DomainError if q = 0 appears.
BranchReport branch_ambiguity_demo(const FractionalOrder& order, const std::vector<double>& q_grid);

struct ConsistencyPoint {
  double alpha = 0.0;
  double x = 0.0;
  double closed = 0.0;
  double oracle = 0.0;
  double oracle_error = 0.0;
  Method closed_method = Method::closed;
  double mixed = 0.0;
  std::string error;  // non-empty when the point could not be evaluated
};

struct ConsistencyReport {
  std::vector<ConsistencyPoint> points;  // alpha-major grid order
  double tolerance = 1e-6;
  double max_abs_diff = 0.0;
  double max_rel_diff = 0.0;
  double max_mixed_diff = 0.0;
  std::size_t worst_index = 0;
  std::size_t failed_points = 0;
  bool pass = true;
};

/// i_hybrid against i_direct on the alpha_list x x_list grid (x is a position,
/// not x / a). A point that throws is recorded and left out of the maxima.
ConsistencyReport consistency_sweep(const std::vector<double>& alpha_list,
                                    const std::vector<double>& x_list, const WellConfig& well,
                                    const QuadratureSettings& cfg, double tolerance = 1e-6,
                                    Execution exec = Execution::parallel);

}  // namespace rieszwell::analysis
