#include "baskakov/shannon.hpp"

#include <cmath>
#include <vector>

#include "baskakov/numerics.hpp"

namespace baskakov {

namespace {

FamilyParams shifted_params(const FamilyParams& params, int shift) {
  if (params.c < 0.0) {
    const long l = params.l - shift;
    if (l < 1) throw UnsupportedParams("shifted family would be degenerate");
    return {params.c, -params.c * static_cast<double>(l), l,
            SupportKind::finite};
  }
  return {params.c, params.n + shift * params.c, 0, SupportKind::infinite};
}

void require_positive_interior(const FamilyParams& params, double x) {
  if (!(x > 0.0) || !params.domain().contains(x))
    throw DomainError("x must be positive and inside I_c");
}

}  // namespace

ShannonEval shannon(const FamilyParams& params, double x,
                    const TruncationPolicy& policy) {
  const WeightWindow win = weight_window(params, x, policy);
  double h = 0.0;
  for (long i = 0; i < win.size(); ++i) {
    if (win.p[i] > 0.0) h -= win.p[i] * win.log_p[i];
  }
  double tail = 0.0;
  if (win.tail_mass > 0.0) {
    // -p_k log p_k decays geometrically with log weights growing at most
    // linearly: bound by tail_mass * (|log p_K| - log r* / (1 - r*)).
    const double a = std::abs(win.log_p[win.size() - 1]);
    const double b = -std::log(win.r_star);
    tail = num::geometric_tail_bound(win.tail_mass, win.r_star, a, b);
  }
  // skipped head weights sit below exp(-720): -p log p <= 720 p each
  tail += win.head_mass * 720.0;
  return {h, std::nullopt, std::nullopt, win.k_hi, tail};
}

double shannon_prime_series(const FamilyParams& params, double x,
                            const TruncationPolicy& policy) {
  if (params.c < 0.0)
    throw UnsupportedParams(
        "shannon_prime_series: series formula requires c >= 0");
  require_positive_interior(params, x);
  const FamilyParams sh = shifted_params(params, 1);
  const WeightWindow win = weight_window(sh, x, policy);
  double sum = 0.0;
  for (long i = 0; i < win.size(); ++i) {
    const double k = static_cast<double>(win.k_lo + i);
    sum += win.p[i] * (std::log(k + 1.0) - std::log(params.n + params.c * k));
  }
  return params.n * (std::log1p(params.c * x) - std::log(x) + sum);
}

double shannon_second_series(const FamilyParams& params, double x,
                             const TruncationPolicy& policy) {
  if (params.c < 0.0)
    throw UnsupportedParams(
        "shannon_second_series: series formula requires c >= 0");
  require_positive_interior(params, x);
  const FamilyParams sh = shifted_params(params, 2);
  const WeightWindow win = weight_window(sh, x, policy);
  double sum = 0.0;
  for (long i = 0; i < win.size(); ++i) {
    const double k = static_cast<double>(win.k_lo + i);
    // log((k+2)(n+ck) / ((k+1)(n+ck+c))) = log1p((n-c)/((k+1)(n+ck+c)))
    const double delta =
        (params.n - params.c) /
        ((k + 1.0) * (params.n + params.c * k + params.c));
    sum += win.p[i] * std::log1p(delta);
  }
  return -params.n / (x * (1.0 + params.c * x)) +
         params.n * (params.n + params.c) * sum;
}

double shannon_prime(const FamilyParams& params, double x,
                     const TruncationPolicy& policy) {
  if (params.c >= 0.0) return shannon_prime_series(params, x, policy);
  if (!params.domain().strictly_inside(x))
    throw DomainError("shannon_prime: x must be interior for c < 0");
  double acc = 0.0;
  for (long k = 0; k <= params.l; ++k) {
    const WeightEval w = weight(params, k, x);
    if (w.value > 0.0)
      acc -= weight_derivative(params, k, x) * w.log_value;
  }
  (void)policy;
  return acc;
}

double shannon_second_integral(const FamilyParams& params, double x,
                               int npoints) {
  if (!(params.c < 0.0))
    throw UnsupportedParams("shannon_second_integral requires c < 0");
  if (!params.domain().strictly_inside(x))
    throw DomainError("shannon_second_integral: x must be interior");
  const double c = params.c;
  const double n = params.n;
  const long l = params.l;
  const double base = -n / (x * (1.0 + c * x));
  if (l == 1) return base;  // the integral term carries a factor l(l-1)
  const double cx = c * x;
  const double integral = num::gauss_legendre_01(
      [&](double s) {
        return num::mu(s) * (std::pow(1.0 + cx - cx * s, l - 2) +
                             std::pow((1.0 + cx) * s - cx, l - 2));
      },
      npoints);
  return base + c * c * static_cast<double>(l) *
                    static_cast<double>(l - 1) * integral;
}

double shannon_integral_rep(long l, double y, int npoints) {
  if (l < 1) throw DomainError("shannon_integral_rep: l must be >= 1");
  if (!(y > 0.0 && y < 1.0))
    throw DomainError("shannon_integral_rep: y must be in (0,1)");
  const double lead =
      -static_cast<double>(l) * (y * std::log(y) + (1.0 - y) * std::log1p(-y));
  if (l == 1) return lead;  // the bracket under the integral is identically 0

  // binomial rows as doubles (exact up to l ~ 57, ample for the rep's use)
  std::vector<double> binom(l + 1);
  binom[0] = 1.0;
  for (long j = 1; j <= l; ++j)
    binom[j] = binom[j - 1] * static_cast<double>(l - j + 1) /
               static_cast<double>(j);

  // q(s) = [(1-y+ys)^l + ((1-y)s+y)^l - 1 - s^l] / (s-1)^2, a polynomial;
  // near s=1 the direct form cancels quadratically, so switch to the
  // expansion q = sum_{j>=2} C(l,j) (y^j + (1-y)^j - 1) (s-1)^(j-2).
  const auto q = [&](double s) {
    const double h = s - 1.0;
    if (std::abs(h) <= 0.5) {
      double acc = 0.0;
      double hp = 1.0;  // h^(j-2)
      double yj = y * y, zj = (1.0 - y) * (1.0 - y);
      for (long j = 2; j <= l; ++j) {
        acc += binom[j] * (yj + zj - 1.0) * hp;
        hp *= h;
        yj *= y;
        zj *= 1.0 - y;
      }
      return acc;
    }
    const double num = std::pow(1.0 - y + y * s, l) +
                       std::pow((1.0 - y) * s + y, l) - 1.0 -
                       std::pow(s, l);
    return num / (h * h);
  };
  const double integral =
      num::gauss_legendre_01([&](double s) { return num::mu(s) * q(s); },
                             npoints);
  return lead + integral;
}

double companion_convexity_value(const FamilyParams& params, double x,
                                 const TruncationPolicy& policy) {
  if (params.c < 0.0 && params.l == 1)
    throw UnsupportedParams(
        "companion_convexity_value: c < 0 requires l >= 2");
  if (!params.domain().strictly_inside(x))
    throw DomainError("companion_convexity_value: x must be interior");
  const double h = shannon(params, x, policy).h;
  if (params.c == 0.0) return h + params.n * x * std::log(x);
  const double cx = params.c * x;
  return h + params.n / params.c *
                 (cx * std::log(x) - (1.0 + cx) * std::log1p(cx));
}

InequalityMargin log_moment_bounds(const FamilyParams& params, double x,
                                   const TruncationPolicy& policy) {
  if (params.c < 0.0)
    throw UnsupportedParams("log_moment_bounds requires c >= 0");
  require_positive_interior(params, x);
  const FamilyParams sh = shifted_params(params, 1);
  const WeightWindow win = weight_window(sh, x, policy);
  double mid = 0.0;
  for (long i = 0; i < win.size(); ++i) {
    const double k = static_cast<double>(win.k_lo + i);
    mid += win.p[i] * (std::log(k + 1.0) - std::log(params.c * k + params.n));
  }
  const double lower = std::log(x) - std::log1p(params.c * x);
  const double upper =
      std::log(x + 1.0 / params.n) - std::log1p(params.c * x);
  return {"log-moment-bounds", x, mid - lower, upper - mid};
}

InequalityMargin binomial_log_moment_bounds(long n, double x) {
  if (n < 1) throw DomainError("binomial_log_moment_bounds: n must be >= 1");
  if (!(x > 0.0 && x < 0.5))
    throw DomainError("binomial_log_moment_bounds: x must be in (0, 1/2)");
  const FamilyParams params = make_family(-1.0, static_cast<double>(n));
  double mid = 0.0;
  for (long k = 0; k <= n; ++k) {
    const double num = static_cast<double>(k + 1);
    const double den = static_cast<double>(n + 1 - k);
    mid += weight(params, k, x).value * (std::log(num) - std::log(den));
  }
  const double lower = std::log(x) - std::log1p(-x);
  const double nn = static_cast<double>(n);
  const double upper =
      std::log(x / (1.0 - x) +
               (1.0 - (nn + 2.0) * std::pow(x, nn + 1.0)) /
                   ((nn + 1.0) * (1.0 - x)));
  return {"binomial-log-moment-bounds", x, mid - lower, upper - mid};
}

double symmetry_check(const FamilyParams& params, double t,
                      const TruncationPolicy& policy) {
  if (!(params.c < 0.0))
    throw UnsupportedParams("symmetry_check requires c < 0");
  const double mid = -1.0 / (2.0 * params.c);
  if (!(t >= 0.0 && t <= mid))
    throw DomainError("symmetry_check: t must lie in [0, -1/(2c)]");
  const double left = shannon(params, mid - t, policy).h;
  const double right = shannon(params, mid + t, policy).h;
  return std::abs(left - right);
}

ShannonEval shannon_report(const FamilyParams& params, double x,
                           const TruncationPolicy& policy) {
  ShannonEval eval = shannon(params, x, policy);
  const bool interior = params.domain().strictly_inside(x);
  if (params.c >= 0.0 && x > 0.0) {
    eval.h_prime = shannon_prime_series(params, x, policy);
    eval.h_second = shannon_second_series(params, x, policy);
  } else if (params.c < 0.0 && interior) {
    eval.h_prime = shannon_prime(params, x, policy);
    eval.h_second = shannon_second_integral(params, x);
  }
  return eval;
}

}  // namespace baskakov
