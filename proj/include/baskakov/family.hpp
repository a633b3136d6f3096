#pragma once

#include <Eigen/Dense>
#include <limits>

#include "baskakov/errors.hpp"

namespace baskakov {

enum class SupportKind { finite, infinite };

/// The parameter interval I_c: [0, -1/c] for c < 0, [0, +inf) otherwise.
struct DomainInterval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  // the interval is half-open at an infinite endpoint
  bool contains(double x) const {
    return x >= lo && (std::isinf(hi) ? std::isfinite(x) : x <= hi);
  }
  bool strictly_inside(double x) const { return x > lo && x < hi; }
};

/// Tolerance and hard cap for certified truncation of the infinite
/// support (c >= 0).
struct TruncationPolicy {
  double epsilon = 1e-12;   // certified tail-mass bound
  long max_terms = 1 << 20;

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
      throw DomainError("TruncationPolicy: epsilon must be in (0,1)");
    if (max_terms < 8)
      throw DomainError("TruncationPolicy: max_terms must be >= 8");
  }
};

/// Validated (c, n) pair.  For c < 0 the order is n = -c*l with l a
/// positive integer and the support is {0,...,l}; otherwise the support
/// is all of N_0.
struct FamilyParams {
  double c = 0.0;
  double n = 1.0;
  long l = 0;  // meaningful iff support == finite
  SupportKind support = SupportKind::infinite;

  DomainInterval domain() const {
    if (c < 0.0) return {0.0, -1.0 / c};
    return {};
  }
  bool finite() const { return support == SupportKind::finite; }
};

/// Validates and builds FamilyParams.  Requires n > 0; n > c when
/// c >= 0; and n/(-c) within 1e-9 of a positive integer when c < 0.
FamilyParams make_family(double c, double n);

struct WeightEval {
  long k = 0;
  double value = 0.0;      // in [0,1]
  double log_value = 0.0;  // -inf permitted
};

/// p_{n,k}(x), evaluated in log space and exponentiated.
WeightEval weight(const FamilyParams& params, long k, double x);

/// d/dx p_{n,k}(x) through the order-shift recurrence
/// p'_{n,k} = n (p_{n+c,k-1} - p_{n+c,k}), with p_{.,-1} := 0 and the
/// degenerate shifted order n+c = 0 taken as the point mass at k = 0.
/// Defined on the interior of I_c only.
double weight_derivative(const FamilyParams& params, long k, double x);

struct Truncation {
  long k = 0;          // last index included
  double tail_bound = 0.0;  // certified bound on the omitted mass
};

/// Smallest certified truncation index past the distribution mode.  For
/// finite support returns (l, 0).  Throws CapExceeded when the policy
/// cap is hit first.
Truncation truncation_index(const FamilyParams& params, double x,
                            const TruncationPolicy& policy);

/// Sum of the included weights; within tail_bound of 1 by construction.
double mass_check(const FamilyParams& params, double x,
                  const TruncationPolicy& policy);

/// Contiguous block of weights covering all but a certified tail.
/// Indices run k_lo..k_hi; the head below k_lo (nonempty only when the
/// mode is huge and low-k weights underflow) is bounded by head_mass.
struct WeightWindow {
  long k_lo = 0;
  long k_hi = 0;
  Eigen::ArrayXd p;      // weights, size k_hi - k_lo + 1
  Eigen::ArrayXd log_p;  // matching log weights
  double tail_mass = 0.0;  // certified bound on sum_{k > k_hi} p_k
  double r_star = 0.0;     // contraction ratio certifying the tail
  double head_mass = 0.0;  // bound on sum_{k < k_lo} p_k
  long size() const { return k_hi - k_lo + 1; }
};

WeightWindow weight_window(const FamilyParams& params, double x,
                           const TruncationPolicy& policy);

namespace detail {

/// Weight of the order-shifted family (c, n + shift*c); handles the
/// degenerate order 0 (point mass at k = 0) that appears for c < 0,
/// l = shift.
WeightEval shifted_weight(const FamilyParams& params, int shift, long k,
                          double x);

/// Closed-form term ratio p_{k+1}/p_k for c >= 0; nonincreasing in k.
double term_ratio(const FamilyParams& params, double x, long k);

}  // namespace detail

}  // namespace baskakov
