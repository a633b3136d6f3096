#pragma once

#include <Eigen/Dense>

#include "baskakov/family.hpp"
#include "baskakov/verification.hpp"

namespace baskakov {

/// Index of coincidence S = sum p^2 with the order-2 Renyi and Tsallis
/// entropies derived from it.
struct QuadEval {
  double s = 1.0;        // in (0,1]
  double renyi = 0.0;    // -log s
  double tsallis = 0.0;  // 1 - s
  long truncation_k = 0;
  double tail_bound = 0.0;
};

/// y(x), y'(x), ..., y^(m)(x) for y = S, generated from the defining ODE.
struct DerivativeTower {
  double x = 0.0;
  Eigen::VectorXd values;  // size m+1
};

QuadEval s_value(const FamilyParams& params, double x,
                 const TruncationPolicy& policy);

/// S'(x) = 2 sum p_k p'_k (termwise differentiation).
double s_prime(const FamilyParams& params, double x,
               const TruncationPolicy& policy);

/// Seeds y = S, y' = S' from the series, solves the ODE
///   x(1+cx)(1+2cx) y'' + (4(n+c)x(1+cx)+1) y' + 2n(1+2cx) y = 0
/// for y'' and differentiates it symbolically up to order m (m <= 24 by
/// default; the coefficient recurrence has bandwidth 4).  Refuses the
/// leading coefficient's roots {0, -1/(2c), -1/c}.
DerivativeTower derivative_tower(const FamilyParams& params, double x, int m,
                                 const TruncationPolicy& policy,
                                 int m_cap = 24);

/// Where derivatives entering a residual check come from.  The tower
/// solves the ODE for y'', so tower-sourced residuals verify only the
/// algebraic form transformations; finite differences give a path that
/// is independent of the equation under test.
enum class DerivSource { ode_tower, finite_difference };

struct ResidualEval {
  double residual = 0.0;  // |LHS| of the equation, all terms moved left
  double scale = 0.0;     // largest |term|
  double relative() const { return scale > 0.0 ? residual / scale : residual; }
};

/// Residual of the defining ODE with y'' always taken from finite
/// differences of S (independent of the equation).
ResidualEval ode_residual(const FamilyParams& params, double x,
                          const TruncationPolicy& policy);

/// Residual of the Heun form satisfied by S(-u/c) at u = -cx (c != 0).
ResidualEval heun_residual(const FamilyParams& params, double x,
                           const TruncationPolicy& policy,
                           DerivSource source = DerivSource::ode_tower);

/// Residual of the confluent Heun form satisfied by S for c = 0.
ResidualEval confluent_heun_residual(double n, double x,
                                     const TruncationPolicy& policy,
                                     DerivSource source = DerivSource::ode_tower);

/// Residual of the Riccati equation satisfied by u = R' = -S'/S.
ResidualEval riccati_residual(const FamilyParams& params, double x,
                              const TruncationPolicy& policy,
                              DerivSource source = DerivSource::ode_tower);

/// Residual of the inhomogeneous equation satisfied by T = 1 - S.
ResidualEval tsallis_ode_residual(const FamilyParams& params, double x,
                                  const TruncationPolicy& policy,
                                  DerivSource source = DerivSource::ode_tower);

/// Uniform evaluation grid.
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  long steps = 101;  // number of points, >= 2
  Eigen::ArrayXd points() const;
  double spacing() const { return (hi - lo) / static_cast<double>(steps - 1); }
};

/// Asserts the alternating sign pattern (-1)^m S^(m) > 0 for m <= m_max
/// on the grid (c >= 0).  x = 0 is checked separately with one-sided
/// differences since the tower is singular there.
verify::VerificationRecord complete_monotonicity_scan(
    const FamilyParams& params, const GridSpec& grid, int m_max,
    const TruncationPolicy& policy);

/// Discrete convexity of S: undivided second central differences of
/// s_value >= -1e-8 across the grid.
verify::VerificationRecord convexity_scan_s(const FamilyParams& params,
                                            const GridSpec& grid,
                                            const TruncationPolicy& policy);

/// Minimum second central difference of log S over the grid.  Asserted
/// (>= -1e-8) for c >= 0; report-only for c < 0, where logarithmic
/// convexity is an open question.
verify::VerificationRecord log_convexity_probe(const FamilyParams& params,
                                               const GridSpec& grid,
                                               const TruncationPolicy& policy);

}  // namespace baskakov
