#include "baskakov/family.hpp"

#include <cmath>
#include <vector>

namespace baskakov {

namespace {

constexpr double kIntegerTol = 1e-9;   // integer detection for l
constexpr double kLogFloor = -720.0;   // below this, weights underflow

void check_domain(const FamilyParams& params, double x) {
  if (!params.domain().contains(x))
    throw DomainError("x outside the family's domain interval");
}

// log p_{n,k}(x) for a valid family; -inf where the weight vanishes.
double log_weight(const FamilyParams& params, long k, double x) {
  const double inf = std::numeric_limits<double>::infinity();
  if (k < 0) return -inf;
  if (params.c < 0.0) {
    if (k > params.l) return -inf;
    double y = std::min(1.0, std::max(0.0, -params.c * x));
    if (y == 0.0) return k == 0 ? 0.0 : -inf;
    if (y == 1.0) return k == params.l ? 0.0 : -inf;
    const double l = static_cast<double>(params.l);
    const double kk = static_cast<double>(k);
    return std::lgamma(l + 1.0) - std::lgamma(kk + 1.0) -
           std::lgamma(l - kk + 1.0) + kk * std::log(y) +
           (l - kk) * std::log1p(-y);
  }
  if (x == 0.0) return k == 0 ? 0.0 : -inf;
  const double kk = static_cast<double>(k);
  if (params.c == 0.0) {
    const double lambda = params.n * x;
    return kk * std::log(lambda) - std::lgamma(kk + 1.0) - lambda;
  }
  // c > 0: (-1)^k C(-a,k) = C(a+k-1,k) with a = n/c > 1
  const double a = params.n / params.c;
  return std::lgamma(a + kk) - std::lgamma(kk + 1.0) - std::lgamma(a) +
         kk * std::log(params.c * x) - (a + kk) * std::log1p(params.c * x);
}

WeightEval eval_from_log(long k, double lw) {
  const double v = std::min(1.0, std::exp(lw));
  return {k, v, lw};
}

}  // namespace

FamilyParams make_family(double c, double n) {
  if (!std::isfinite(c) || !std::isfinite(n))
    throw InvalidOrder("make_family: c and n must be finite");
  if (!(n > 0.0)) throw InvalidOrder("make_family: n must be positive");
  if (c >= 0.0) {
    if (!(n > c)) throw InvalidOrder("make_family: need n > c for c >= 0");
    return {c, n, 0, SupportKind::infinite};
  }
  const double ratio = n / (-c);
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > kIntegerTol)
    throw NonIntegerL("make_family: n/(-c) must be a positive integer");
  return {c, n, static_cast<long>(rounded), SupportKind::finite};
}

WeightEval weight(const FamilyParams& params, long k, double x) {
  if (k < 0) throw IndexError("weight: k must be nonnegative");
  check_domain(params, x);
  return eval_from_log(k, log_weight(params, k, x));
}

namespace detail {

WeightEval shifted_weight(const FamilyParams& params, int shift, long k,
                          double x) {
  if (k < 0) return {k, 0.0, -std::numeric_limits<double>::infinity()};
  if (params.c < 0.0) {
    const long l_shifted = params.l - shift;
    if (l_shifted < 0)
      throw UnsupportedParams("shifted family undefined: l - shift < 0");
    if (l_shifted == 0) {
      // degenerate order n + shift*c = 0: the point mass at k = 0
      const double inf = std::numeric_limits<double>::infinity();
      return k == 0 ? WeightEval{k, 1.0, 0.0} : WeightEval{k, 0.0, -inf};
    }
    FamilyParams shifted{params.c, -params.c * static_cast<double>(l_shifted),
                         l_shifted, SupportKind::finite};
    return eval_from_log(k, log_weight(shifted, k, x));
  }
  FamilyParams shifted{params.c, params.n + shift * params.c, 0,
                       SupportKind::infinite};
  return eval_from_log(k, log_weight(shifted, k, x));
}

double term_ratio(const FamilyParams& params, double x, long k) {
  const double kk = static_cast<double>(k);
  if (params.c == 0.0) return params.n * x / (kk + 1.0);
  const double q = params.c * x / (1.0 + params.c * x);
  return (params.n / params.c + kk) / (kk + 1.0) * q;
}

}  // namespace detail

double weight_derivative(const FamilyParams& params, long k, double x) {
  if (k < 0) throw IndexError("weight_derivative: k must be nonnegative");
  if (!params.domain().strictly_inside(x))
    throw DomainError("weight_derivative: x must be interior to I_c");
  const double left = detail::shifted_weight(params, 1, k - 1, x).value;
  const double right = detail::shifted_weight(params, 1, k, x).value;
  return params.n * (left - right);
}

WeightWindow weight_window(const FamilyParams& params, double x,
                           const TruncationPolicy& policy) {
  policy.validate();
  check_domain(params, x);
  WeightWindow win;

  if (params.finite()) {
    if (params.l + 1 > policy.max_terms)
      throw CapExceeded("finite support larger than the policy cap",
                        params.l, 0.0);
    win.k_lo = 0;
    win.k_hi = params.l;
    win.p.resize(params.l + 1);
    win.log_p.resize(params.l + 1);
    for (long k = 0; k <= params.l; ++k) {
      const double lw = log_weight(params, k, x);
      win.log_p[k] = lw;
      win.p[k] = std::min(1.0, std::exp(lw));
    }
    return win;
  }

  if (x == 0.0) {
    win.k_lo = win.k_hi = 0;
    win.p = Eigen::ArrayXd::Constant(1, 1.0);
    win.log_p = Eigen::ArrayXd::Constant(1, 0.0);
    return win;
  }

  // anchor at (an estimate of) the mode, where the weight is largest
  const double mode_est =
      params.c == 0.0 ? params.n * x : params.n * x - (1.0 + params.c * x);
  const long km = static_cast<long>(std::max(0.0, std::floor(mode_est)));
  const double anchor_log = log_weight(params, km, x);

  std::vector<double> up_log;
  up_log.push_back(anchor_log);
  long k = km;
  double cur_log = anchor_log;
  double r = detail::term_ratio(params, x, k);
  while (true) {
    const double p_k = std::exp(cur_log);
    if (r < 1.0) {
      const double bound = p_k * r / (1.0 - r);
      if (bound <= policy.epsilon) {
        win.r_star = r;
        win.tail_mass = bound;
        break;
      }
    }
    if (k + 1 >= policy.max_terms) {
      const double achieved =
          r < 1.0 ? p_k * r / (1.0 - r) : std::numeric_limits<double>::infinity();
      throw CapExceeded("truncation cap exceeded before certification", k,
                        achieved);
    }
    cur_log += std::log(r);
    ++k;
    up_log.push_back(cur_log);
    r = detail::term_ratio(params, x, k);
  }
  const long k_hi = k;

  // walk down from the mode until the weights underflow
  std::vector<double> down_log;
  cur_log = anchor_log;
  long k_lo = km;
  while (k_lo > 0 && cur_log > kLogFloor) {
    cur_log -= std::log(detail::term_ratio(params, x, k_lo - 1));
    --k_lo;
    down_log.push_back(cur_log);
  }
  if (k_lo > 0) {
    // everything below is smaller than the underflow floor
    win.head_mass = static_cast<double>(k_lo) * std::exp(kLogFloor);
  }

  win.k_lo = k_lo;
  win.k_hi = k_hi;
  const long size = k_hi - k_lo + 1;
  win.p.resize(size);
  win.log_p.resize(size);
  for (long i = 0; i < static_cast<long>(down_log.size()); ++i) {
    const long idx = km - 1 - i - k_lo;
    win.log_p[idx] = down_log[i];
  }
  for (long i = 0; i < static_cast<long>(up_log.size()); ++i) {
    win.log_p[km + i - k_lo] = up_log[i];
  }
  win.p = win.log_p.exp().min(1.0);
  return win;
}

Truncation truncation_index(const FamilyParams& params, double x,
                            const TruncationPolicy& policy) {
  if (params.finite()) {
    policy.validate();
    check_domain(params, x);
    return {params.l, 0.0};
  }
  const WeightWindow win = weight_window(params, x, policy);
  return {win.k_hi, win.tail_mass};
}

double mass_check(const FamilyParams& params, double x,
                  const TruncationPolicy& policy) {
  return weight_window(params, x, policy).p.sum();
}

}  // namespace baskakov
