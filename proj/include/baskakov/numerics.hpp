#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "baskakov/errors.hpp"

namespace baskakov::num {

/// mu(s) = (s-1)/log s on [0,1], extended by its limits mu(0)=0, mu(1)=1.
/// Strictly increasing and bounded by (0,1) on the open interval.
double mu(double s);

/// Nodes/weights of a quadrature rule scaled to [0,1].
struct QuadratureRule {
  Eigen::ArrayXd nodes;    // strictly increasing, all in (0,1)
  Eigen::ArrayXd weights;  // positive, summing to 1
};

/// Composite Gauss-Legendre rule on [0,1] with `npoints` nodes per panel
/// and panels geometrically graded toward s=0 (breakpoints 2^-m).  The
/// grading resolves integrands with 1/log s endpoint layers, which a
/// single fixed-order rule cannot.  npoints must be one of {32, 64, 128}.
const QuadratureRule& gauss_legendre_01_rule(int npoints = 64);

template <class F>
double gauss_legendre_01(F&& g, int npoints = 64) {
  const QuadratureRule& rule = gauss_legendre_01_rule(npoints);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * g(rule.nodes[i]);
  }
  return acc;
}

/// log |C(alpha, k)| and the coefficient's sign for real alpha.
/// sign == 0 flags an exactly-zero coefficient (alpha a nonnegative
/// integer smaller than k).
struct LogBinomial {
  double log_abs;
  int sign;
};
LogBinomial log_binomial(double alpha, long k);

struct DiffStencil {
  int order;    // derivative order
  int points;   // stencil width actually evaluated
  double step;  // finest step used
};

struct DiffResult {
  double value;
  double error_estimate;
  DiffStencil stencil;
};

/// Step balancing truncation against rounding for the central stencils
/// below: h = eps^(1/(order+2)) * max(1, |x|).
double default_step(int order, double x);

namespace detail {

template <class F>
double stencil_eval(F& f, double x, int order, double h) {
  switch (order) {
    case 1:  // 5-point, O(h^4)
      return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) /
             (12 * h);
    case 2:  // 3-point, O(h^2)
      return (f(x - h) - 2 * f(x) + f(x + h)) / (h * h);
    case 3:  // O(h^2)
      return (-f(x - 2 * h) + 2 * f(x - h) - 2 * f(x + h) + f(x + 2 * h)) /
             (2 * h * h * h);
    case 4:  // O(h^2)
      return (f(x - 2 * h) - 4 * f(x - h) + 6 * f(x) - 4 * f(x + h) +
              f(x + 2 * h)) /
             (h * h * h * h);
    default:
      throw UnsupportedParams("central_diff: order must be in 1..4");
  }
}

inline int stencil_accuracy(int order) { return order == 1 ? 4 : 2; }
inline int stencil_points(int order) { return order == 2 ? 3 : 5; }

}  // namespace detail

/// Central finite difference of `f` at `x`, Richardson-extrapolated once
/// from steps (2h, h).  `step` = 0 picks default_step().
template <class F>
DiffResult central_diff(F&& f, double x, int order, double step = 0.0) {
  if (order < 1 || order > 4)
    throw UnsupportedParams("central_diff: order must be in 1..4");
  const double h = step > 0.0 ? step : default_step(order, x);
  const double coarse = detail::stencil_eval(f, x, order, 2 * h);
  const double fine = detail::stencil_eval(f, x, order, h);
  const double factor = std::pow(2.0, detail::stencil_accuracy(order));
  const double value = (factor * fine - coarse) / (factor - 1.0);
  const double err = std::abs(fine - coarse) / (factor - 1.0);
  return {value, err, DiffStencil{order, detail::stencil_points(order), h}};
}

/// Upper bound on a geometric tail with affine factor growth:
///   sum_{m>=1} p*r^m * (a + b*m)  <=  tail_mass * (a + b/(1-r))
/// where tail_mass = p*r/(1-r).  Used for certified entropy tails.
inline double geometric_tail_bound(double tail_mass, double r, double a,
                                   double b) {
  if (tail_mass <= 0.0) return 0.0;
  return tail_mass * (a + b / (1.0 - r));
}

}  // namespace baskakov::num
