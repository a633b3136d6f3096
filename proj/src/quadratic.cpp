#include "baskakov/quadratic.hpp"

#include <cmath>

#include "baskakov/numerics.hpp"

namespace baskakov {

namespace {

using verify::strfmt;

double window_value(const WeightWindow& win, long k) {
  if (k < win.k_lo || k > win.k_hi) return 0.0;
  return win.p[k - win.k_lo];
}

// roots of the ODE's leading coefficient x(1+cx)(1+2cx)
void check_nonsingular(const FamilyParams& params, double x) {
  const double tol = 1e-9 * std::max(1.0, std::abs(x));
  if (std::abs(x) < tol) throw SingularPoint("x = 0 is a singular point");
  if (params.c != 0.0) {
    if (std::abs(x + 1.0 / (2.0 * params.c)) < tol)
      throw SingularPoint("x = -1/(2c) is a singular point");
    if (std::abs(x + 1.0 / params.c) < tol)
      throw SingularPoint("x = -1/c is a singular point");
  }
}

struct OdeCoeffs {
  double a, a1, a2, a3;  // x(1+cx)(1+2cx) and derivatives
  double b, b1, b2;      // 4(n+c)x(1+cx)+1 and derivatives
  double c0, c1;         // 2n(1+2cx) and derivative
};

OdeCoeffs ode_coeffs(const FamilyParams& params, double x) {
  const double c = params.c;
  const double n = params.n;
  OdeCoeffs k;
  k.a = x * (1.0 + c * x) * (1.0 + 2.0 * c * x);
  k.a1 = 1.0 + 6.0 * c * x + 6.0 * c * c * x * x;
  k.a2 = 6.0 * c + 12.0 * c * c * x;
  k.a3 = 12.0 * c * c;
  k.b = 4.0 * (n + c) * x * (1.0 + c * x) + 1.0;
  k.b1 = 4.0 * (n + c) * (1.0 + 2.0 * c * x);
  k.b2 = 8.0 * c * (n + c);
  k.c0 = 2.0 * n * (1.0 + 2.0 * c * x);
  k.c1 = 4.0 * n * c;
  return k;
}

struct Derivs {
  double y, y1, y2;
};

Derivs derivatives_for_residual(const FamilyParams& params, double x,
                                const TruncationPolicy& policy,
                                DerivSource source) {
  if (source == DerivSource::ode_tower) {
    const DerivativeTower tower = derivative_tower(params, x, 2, policy);
    return {tower.values[0], tower.values[1], tower.values[2]};
  }
  const auto s = [&](double t) { return s_value(params, t, policy).s; };
  const double y = s_value(params, x, policy).s;
  const double y1 = num::central_diff(s, x, 1).value;
  const double y2 = num::central_diff(s, x, 2).value;
  return {y, y1, y2};
}

ResidualEval combine(std::initializer_list<double> terms) {
  double sum = 0.0, scale = 0.0;
  for (double t : terms) {
    sum += t;
    scale = std::max(scale, std::abs(t));
  }
  return {std::abs(sum), scale};
}

}  // namespace

QuadEval s_value(const FamilyParams& params, double x,
                 const TruncationPolicy& policy) {
  const WeightWindow win = weight_window(params, x, policy);
  const double s = (win.p * win.p).sum();
  double tail = win.head_mass;  // head squares are below the head mass
  if (win.tail_mass > 0.0) {
    const double pk = win.p[win.size() - 1];
    const double r2 = win.r_star * win.r_star;
    tail += pk * pk * r2 / (1.0 - r2);
  }
  return {s, -std::log(s) + 0.0, 1.0 - s, win.k_hi, tail};
}

double s_prime(const FamilyParams& params, double x,
               const TruncationPolicy& policy) {
  if (!params.domain().contains(x))
    throw DomainError("s_prime: x outside I_c");
  if (x == 0.0) return -2.0 * params.n;  // only p_0 p_0' survives at 0
  if (!params.domain().strictly_inside(x))
    throw DomainError("s_prime: x must be interior or 0");

  const WeightWindow win = weight_window(params, x, policy);
  if (params.finite()) {
    double acc = 0.0;
    for (long k = 0; k <= params.l; ++k)
      acc += window_value(win, k) * weight_derivative(params, k, x);
    return 2.0 * acc;
  }
  FamilyParams shifted{params.c, params.n + params.c, 0,
                       SupportKind::infinite};
  const WeightWindow sh = weight_window(shifted, x, policy);
  double acc = 0.0;
  for (long k = win.k_lo; k <= win.k_hi; ++k) {
    const double deriv =
        params.n * (window_value(sh, k - 1) - window_value(sh, k));
    acc += window_value(win, k) * deriv;
  }
  return 2.0 * acc;
}

DerivativeTower derivative_tower(const FamilyParams& params, double x, int m,
                                 const TruncationPolicy& policy, int m_cap) {
  if (m < 1) throw UnsupportedParams("derivative_tower: m must be >= 1");
  if (m > m_cap)
    throw UnsupportedParams(
        "derivative_tower: m beyond the double-precision cap");
  if (!params.domain().strictly_inside(x))
    throw DomainError("derivative_tower: x must be interior");
  check_nonsingular(params, x);

  const OdeCoeffs k = ode_coeffs(params, x);
  const double a_derivs[4] = {k.a, k.a1, k.a2, k.a3};
  const double b_derivs[3] = {k.b, k.b1, k.b2};
  const double c_derivs[2] = {k.c0, k.c1};

  DerivativeTower tower;
  tower.x = x;
  tower.values.resize(m + 1);
  tower.values[0] = s_value(params, x, policy).s;
  if (m >= 1) tower.values[1] = s_prime(params, x, policy);

  // differentiate the ODE j times (Leibniz; coefficient degrees cap the
  // bandwidth at 4) and solve for y^(j+2)
  std::vector<double> binom{1.0};
  for (int j = 0; j + 2 <= m; ++j) {
    double sum = 0.0;
    for (int i = 1; i <= std::min(j, 3); ++i)
      sum += binom[i] * a_derivs[i] * tower.values[j + 2 - i];
    for (int i = 0; i <= std::min(j, 2); ++i)
      sum += binom[i] * b_derivs[i] * tower.values[j + 1 - i];
    for (int i = 0; i <= std::min(j, 1); ++i)
      sum += binom[i] * c_derivs[i] * tower.values[j - i];
    tower.values[j + 2] = -sum / k.a;

    // advance the binomial row C(j+1, .)
    binom.push_back(0.0);
    for (int i = static_cast<int>(binom.size()) - 1; i >= 1; --i)
      binom[i] += binom[i - 1];
  }
  return tower;
}

ResidualEval ode_residual(const FamilyParams& params, double x,
                          const TruncationPolicy& policy) {
  if (!params.domain().strictly_inside(x))
    throw DomainError("ode_residual: x must be interior");
  check_nonsingular(params, x);
  const OdeCoeffs k = ode_coeffs(params, x);
  const auto s = [&](double t) { return s_value(params, t, policy).s; };
  const double y = s_value(params, x, policy).s;
  const double y1 = s_prime(params, x, policy);
  const double y2 = num::central_diff(s, x, 2).value;
  return combine({k.a * y2, k.b * y1, k.c0 * y});
}

ResidualEval heun_residual(const FamilyParams& params, double x,
                           const TruncationPolicy& policy,
                           DerivSource source) {
  if (params.c == 0.0)
    throw UnsupportedParams("heun_residual: requires c != 0");
  if (!params.domain().strictly_inside(x))
    throw DomainError("heun_residual: x must be interior");
  check_nonsingular(params, x);  // u in {0, 1/2, 1} <=> x a coefficient root

  const double c = params.c;
  const double n = params.n;
  const double u = -c * x;
  const Derivs d = derivatives_for_residual(params, x, policy, source);
  const double yu1 = d.y1 * (-1.0 / c);
  const double yu2 = d.y2 / (c * c);
  const double p =
      1.0 / u + 1.0 / (u - 1.0) + (2.0 * n / c) / (u - 0.5);
  const double q = (2.0 * n / c * u - n / c) /
                   (u * (u - 1.0) * (u - 0.5));
  return combine({yu2, p * yu1, q * d.y});
}

ResidualEval confluent_heun_residual(double n, double x,
                                     const TruncationPolicy& policy,
                                     DerivSource source) {
  const FamilyParams params = make_family(0.0, n);
  const double tol = 1e-9 * std::max(1.0, std::abs(x));
  if (std::abs(x) < tol)
    throw SingularPoint("confluent_heun_residual: x = 0");
  if (std::abs(x - 1.0) < tol)
    throw SingularPoint("confluent_heun_residual: x = 1 is a coefficient pole");
  if (!(x > 0.0)) throw DomainError("confluent_heun_residual: x must be > 0");
  const Derivs d = derivatives_for_residual(params, x, policy, source);
  return combine({d.y2, (4.0 * n + 1.0 / x) * d.y1,
                  (2.0 * n * x - 2.0 * n) / (x * (x - 1.0)) * d.y});
}

ResidualEval riccati_residual(const FamilyParams& params, double x,
                              const TruncationPolicy& policy,
                              DerivSource source) {
  if (!params.domain().strictly_inside(x))
    throw DomainError("riccati_residual: x must be interior");
  check_nonsingular(params, x);
  const OdeCoeffs k = ode_coeffs(params, x);
  const Derivs d = derivatives_for_residual(params, x, policy, source);
  const double u = -d.y1 / d.y;
  const double u1 = -d.y2 / d.y + (d.y1 / d.y) * (d.y1 / d.y);
  return combine({k.a * u1, -k.a * u * u, k.b * u, -k.c0});
}

ResidualEval tsallis_ode_residual(const FamilyParams& params, double x,
                                  const TruncationPolicy& policy,
                                  DerivSource source) {
  if (!params.domain().strictly_inside(x))
    throw DomainError("tsallis_ode_residual: x must be interior");
  check_nonsingular(params, x);
  const OdeCoeffs k = ode_coeffs(params, x);
  const Derivs d = derivatives_for_residual(params, x, policy, source);
  const double t = 1.0 - d.y;
  return combine({k.a * (-d.y2), k.b * (-d.y1), k.c0 * t, -k.c0});
}

Eigen::ArrayXd GridSpec::points() const {
  if (steps < 2 || !(lo < hi)) throw DomainError("GridSpec: need lo < hi, steps >= 2");
  return Eigen::ArrayXd::LinSpaced(steps, lo, hi);
}

verify::VerificationRecord complete_monotonicity_scan(
    const FamilyParams& params, const GridSpec& grid, int m_max,
    const TruncationPolicy& policy) {
  if (params.c < 0.0)
    throw UnsupportedParams("complete monotonicity asserted for c >= 0 only");
  if (m_max > 8) throw UnsupportedParams("m_max capped at 8 in floating point");
  if (!(grid.lo > 0.0))
    throw DomainError("complete_monotonicity_scan: grid must avoid x = 0");

  verify::VerificationRecord rec{"quadratic", "complete-monotonicity",
                                 verify::Status::pass, 0.0, ""};
  double worst = std::numeric_limits<double>::infinity();
  const Eigen::ArrayXd xs = grid.points();
  for (long i = 0; i < xs.size(); ++i) {
    const DerivativeTower tower =
        derivative_tower(params, xs[i], m_max, policy);
    for (int m = 0; m <= m_max; ++m) {
      const double signed_value =
          (m % 2 == 0 ? 1.0 : -1.0) * tower.values[m];
      if (signed_value < worst) {
        worst = signed_value;
        rec.location = strfmt("c=%g n=%g x=%.12g m=%d", params.c, params.n,
                              xs[i], m);
      }
    }
  }
  // x = 0: y(0) = 1 and y'(0) = -2n are exact; orders 2 and 3 by
  // one-sided differences of S
  const auto s = [&](double t) { return s_value(params, t, policy).s; };
  for (int order = 2; order <= std::min(3, m_max); ++order) {
    const double h = num::default_step(order, 0.0);
    double est;
    if (order == 2)
      est = (2.0 * s(0.0) - 5.0 * s(h) + 4.0 * s(2 * h) - s(3 * h)) / (h * h);
    else
      est = (-5.0 * s(0.0) + 18.0 * s(h) - 24.0 * s(2 * h) + 14.0 * s(3 * h) -
             3.0 * s(4 * h)) /
            (2.0 * h * h * h);
    const double signed_value = (order % 2 == 0 ? 1.0 : -1.0) * est;
    if (signed_value < worst) {
      worst = signed_value;
      rec.location = strfmt("c=%g n=%g x=0 (one-sided) m=%d", params.c,
                            params.n, order);
    }
  }
  rec.worst_margin = worst;
  if (!(worst > 0.0)) rec.status = verify::Status::fail;
  return rec;
}

verify::VerificationRecord convexity_scan_s(const FamilyParams& params,
                                            const GridSpec& grid,
                                            const TruncationPolicy& policy) {
  const Eigen::ArrayXd xs = grid.points();
  Eigen::ArrayXd vals(xs.size());
  for (long i = 0; i < xs.size(); ++i)
    vals[i] = s_value(params, xs[i], policy).s;

  verify::VerificationRecord rec{"quadratic", "s-convexity",
                                 verify::Status::pass, 0.0, ""};
  double worst = std::numeric_limits<double>::infinity();
  for (long i = 1; i + 1 < xs.size(); ++i) {
    const double d = vals[i - 1] - 2.0 * vals[i] + vals[i + 1];
    const double margin = d + 1e-8;
    if (margin < worst) {
      worst = margin;
      rec.location =
          strfmt("c=%g n=%g x=%.12g", params.c, params.n, xs[i]);
    }
  }
  rec.worst_margin = worst;
  if (worst < 0.0) rec.status = verify::Status::fail;
  return rec;
}

verify::VerificationRecord log_convexity_probe(const FamilyParams& params,
                                               const GridSpec& grid,
                                               const TruncationPolicy& policy) {
  const Eigen::ArrayXd xs = grid.points();
  Eigen::ArrayXd vals(xs.size());
  for (long i = 0; i < xs.size(); ++i)
    vals[i] = std::log(s_value(params, xs[i], policy).s);

  const double h2 = grid.spacing() * grid.spacing();
  double min_dd = std::numeric_limits<double>::infinity();
  double argmin = xs[0];
  for (long i = 1; i + 1 < xs.size(); ++i) {
    const double dd = (vals[i - 1] - 2.0 * vals[i] + vals[i + 1]) / h2;
    if (dd < min_dd) {
      min_dd = dd;
      argmin = xs[i];
    }
  }
  verify::VerificationRecord rec{"quadratic", "log-s-convexity",
                                 verify::Status::pass, min_dd,
                                 strfmt("c=%g n=%g argmin x=%.12g", params.c,
                                        params.n, argmin)};
  if (params.c < 0.0) {
    rec.status = verify::Status::report_only;  // open question: never assert
  } else if (min_dd < -1e-8) {
    rec.status = verify::Status::fail;
  }
  return rec;
}

}  // namespace baskakov
