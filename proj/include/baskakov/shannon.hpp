#pragma once

#include <optional>
#include <string>

#include "baskakov/family.hpp"

namespace baskakov {

struct ShannonEval {
  double h = 0.0;  // nats
  std::optional<double> h_prime;
  std::optional<double> h_second;
  long truncation_k = 0;
  double tail_bound = 0.0;
};

/// Two-sided margin of a sandwich inequality; both gaps nonnegative on a
/// passing check.
struct InequalityMargin {
  std::string name;
  double x = 0.0;
  double lower_gap = 0.0;
  double upper_gap = 0.0;
  bool pass() const { return lower_gap >= 0.0 && upper_gap >= 0.0; }
};

/// H(x) = -sum p log p over the certified truncation (0 log 0 := 0).
ShannonEval shannon(const FamilyParams& params, double x,
                    const TruncationPolicy& policy);

/// H'(x) for c >= 0 by the shifted-family series
///   n (log((1+cx)/x) + sum_k p_{n+c,k}(x) log((k+1)/(n+ck))).
double shannon_prime_series(const FamilyParams& params, double x,
                            const TruncationPolicy& policy);

/// H''(x) for c >= 0 by the doubly-shifted series.
double shannon_second_series(const FamilyParams& params, double x,
                             const TruncationPolicy& policy);

/// H'(x) for any c: series path for c >= 0, termwise differentiation of
/// the finite sum for c < 0.
double shannon_prime(const FamilyParams& params, double x,
                     const TruncationPolicy& policy);

/// H''(x) for c < 0 by the integral representation
///   -n/(x(1+cx)) + c^2 l(l-1) int_0^1 mu(s) [(1+cx-cxs)^(l-2)
///                                            + ((1+cx)s-cx)^(l-2)] ds.
double shannon_second_integral(const FamilyParams& params, double x,
                               int npoints = 64);

/// H_{l,-1}(y) by the integral representation (binomial case, rescaled
/// coordinate y in (0,1)).
double shannon_integral_rep(long l, double y, int npoints = 64);

/// The convex companion: H + n x log x for c = 0, and
/// H + (n/c)(cx log x - (1+cx) log(1+cx)) otherwise.  Unsupported for
/// c < 0 with l = 1.
double companion_convexity_value(const FamilyParams& params, double x,
                                 const TruncationPolicy& policy);

/// Margins of  log(x/(1+cx)) <= sum p_{n+c,k} log((k+1)/(ck+n))
///                           <= log((x+1/n)/(1+cx))   (c >= 0, x > 0).
InequalityMargin log_moment_bounds(const FamilyParams& params, double x,
                                   const TruncationPolicy& policy);

/// Margins of the strict binomial variant on 0 < x < 1/2:
///   log(x/(1-x)) < sum C(n,k)x^k(1-x)^(n-k) log((k+1)/(n+1-k))
///                < log(x/(1-x) + (1-(n+2)x^(n+1))/((n+1)(1-x))).
InequalityMargin binomial_log_moment_bounds(long n, double x);

/// |H(-1/(2c) - t) - H(-1/(2c) + t)| for c < 0; zero up to rounding.
double symmetry_check(const FamilyParams& params, double t,
                      const TruncationPolicy& policy);

/// H with first and second derivatives filled wherever the formula
/// paths define them (CLI convenience).
ShannonEval shannon_report(const FamilyParams& params, double x,
                           const TruncationPolicy& policy);

}  // namespace baskakov
