#include "baskakov/verification.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "baskakov/exact.hpp"
#include "baskakov/numerics.hpp"
#include "baskakov/quadratic.hpp"
#include "baskakov/shannon.hpp"

namespace baskakov::verify {

std::string strfmt(const char* fmt, ...) {
  char buf[320];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report_only: return "report-only";
  }
  return "?";
}

bool any_failure(const std::vector<VerificationRecord>& records) {
  for (const auto& r : records)
    if (r.status == Status::fail) return true;
  return false;
}

namespace {

// ---- manifest v1: pinned parameter sets driving every built-in check ----
constexpr double kAllC[] = {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
constexpr double kNonnegC[] = {0.0, 0.5, 1.0, 2.0};
constexpr unsigned long long kSeed = 20260810ull;
constexpr long kMassChecks = 200;
constexpr long kDerivChecksPerC = 50;
constexpr long kLogGridPoints = 200;
constexpr long kFineGridPoints = 201;
constexpr long kRationalCrossChecks = 100;

Eigen::ArrayXd log_grid(double lo, double hi, long points) {
  Eigen::ArrayXd t =
      Eigen::ArrayXd::LinSpaced(points, std::log(lo), std::log(hi));
  return t.exp();
}

// orders n paired with each c >= 0 on the dense grids
std::vector<double> orders_for(double c) { return {c + 1.0, c + 2.5}; }

struct Worst {
  double margin = std::numeric_limits<double>::infinity();
  std::string location;
  void update(double m, std::string loc) {
    if (m < margin) {
      margin = m;
      location = std::move(loc);
    }
  }
};

VerificationRecord close_record(const char* suite, const char* case_id,
                                const Worst& worst) {
  VerificationRecord rec{suite, case_id,
                         worst.margin >= 0.0 ? Status::pass : Status::fail,
                         worst.margin, worst.location};
  return rec;
}

// ---- shannon suite -------------------------------------------------------

VerificationRecord check_normalization(const TruncationPolicy& policy) {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Worst worst;
  for (long i = 0; i < kMassChecks; ++i) {
    const double c = kAllC[i % 6];
    FamilyParams params;
    double x;
    if (c < 0.0) {
      const long l = 1 + static_cast<long>(uni(rng) * 10.0);
      params = make_family(c, -c * static_cast<double>(l));
      x = uni(rng) * (-1.0 / c);
    } else {
      params = make_family(c, c + 0.1 + uni(rng) * 5.0);
      x = uni(rng) * 50.0;
    }
    const Truncation trunc = truncation_index(params, x, policy);
    const double mass = mass_check(params, x, policy);
    const double margin =
        trunc.tail_bound + 1e-12 - std::abs(mass - 1.0);
    worst.update(margin, strfmt("c=%g n=%.6g x=%.6g", params.c, params.n, x));
  }
  return close_record("shannon", "weights-normalization", worst);
}

VerificationRecord check_weight_derivative(const TruncationPolicy& policy) {
  (void)policy;
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Worst worst;
  for (double c : kAllC) {
    for (long i = 0; i < kDerivChecksPerC; ++i) {
      FamilyParams params;
      double x;
      if (c < 0.0) {
        const long l = 1 + static_cast<long>(uni(rng) * 8.0);
        params = make_family(c, -c * static_cast<double>(l));
        x = (0.08 + 0.84 * uni(rng)) * (-1.0 / c);
      } else {
        params = make_family(c, c + 0.2 + uni(rng) * 4.0);
        x = 0.05 + 8.0 * uni(rng);
      }
      const double mean = params.n * x;
      const double spread =
          std::sqrt(std::max(0.25, mean * (1.0 + params.c * x)));
      const long k_max = static_cast<long>(std::ceil(mean + 2.0 * spread)) + 3;
      const long k = static_cast<long>(uni(rng) * static_cast<double>(k_max));
      const double wd = weight_derivative(params, k, x);
      const double fd = num::central_diff(
          [&](double t) { return weight(params, k, t).value; }, x, 1).value;
      const double rel = std::abs(fd - wd) / std::max(std::abs(wd), 1e-3);
      worst.update(1e-6 - rel, strfmt("c=%g n=%.6g k=%ld x=%.6g", params.c,
                                      params.n, k, x));
    }
  }
  return close_record("shannon", "weight-derivative-fd", worst);
}

void shannon_curvature_cases(const TruncationPolicy& policy,
                             std::vector<VerificationRecord>& out) {
  Worst negative, lower, upper, increasing;
  const Eigen::ArrayXd xs = log_grid(1e-3, 1e3, kLogGridPoints);
  for (double c : kNonnegC) {
    for (double n : orders_for(c)) {
      const FamilyParams params = make_family(c, n);
      for (long i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double hpp = shannon_second_series(params, x, policy);
        const double hp = shannon_prime_series(params, x, policy);
        const double lo = -n / (x * (1.0 + c * x));
        const double up_factor =
            c == 0.0 ? std::exp(-n * x)
                     : c / n + (1.0 - c / n) *
                                   std::pow(1.0 + c * x, -n / c);
        const double up = lo * up_factor;
        const std::string loc = strfmt("c=%g n=%g x=%.6g", c, n, x);
        negative.update(-hpp, loc);
        lower.update(hpp - lo, loc);
        upper.update(up - hpp, loc);
        increasing.update(hp, loc);
      }
    }
  }
  out.push_back(close_record("shannon", "second-derivative-negative", negative));
  out.push_back(close_record("shannon", "second-derivative-lower-bound", lower));
  out.push_back(close_record("shannon", "second-derivative-upper-bound", upper));
  out.push_back(close_record("shannon", "first-derivative-positive", increasing));
}

void shannon_cneg_cases(const TruncationPolicy& policy, long l_max,
                        std::vector<VerificationRecord>& out) {
  Worst symmetry, concavity, rise, fall, integral_fd, int_lower, int_upper;
  for (long l = 1; l <= l_max; ++l) {
    const FamilyParams params = make_family(-1.0, static_cast<double>(l));
    const double hi = 1.0;

    for (long i = 0; i <= 25; ++i) {
      const double t = 0.5 * static_cast<double>(i) / 25.0;
      const double diff = symmetry_check(params, t, policy);
      symmetry.update(1e-12 - diff, strfmt("l=%ld t=%.6g", l, t));
    }

    const Eigen::ArrayXd xs =
        Eigen::ArrayXd::LinSpaced(kFineGridPoints, 0.0, hi);
    Eigen::ArrayXd h(xs.size());
    for (long i = 0; i < xs.size(); ++i)
      h[i] = shannon(params, xs[i], policy).h;
    for (long i = 1; i + 1 < xs.size(); ++i) {
      const double dd = h[i - 1] - 2.0 * h[i] + h[i + 1];
      concavity.update(1e-8 - dd, strfmt("l=%ld x=%.6g", l, xs[i]));
    }
    for (long i = 0; i + 1 < xs.size(); ++i) {
      const double d = h[i + 1] - h[i];
      const double mid = 0.5 * (xs[i] + xs[i + 1]);
      if (mid < 0.5)
        rise.update(d + 1e-10, strfmt("l=%ld x=%.6g", l, mid));
      else
        fall.update(1e-10 - d, strfmt("l=%ld x=%.6g", l, mid));
    }

    for (long i = 1; i <= 17; ++i) {
      const double x = 0.05 + 0.9 * static_cast<double>(i - 1) / 16.0;
      const double by_integral = shannon_second_integral(params, x);
      const std::string loc = strfmt("l=%ld x=%.6g", l, x);
      if (l >= 2) {
        const double by_fd = num::central_diff(
            [&](double t) { return shannon(params, t, policy).h; }, x, 2).value;
        const double rel =
            std::abs(by_integral - by_fd) / std::abs(by_integral);
        integral_fd.update(1e-6 - rel, loc);
        int_lower.update(by_integral - (-params.n / (x * (1.0 - x))), loc);
      }
      const double cap = -params.n *
                         (std::pow(1.0 - x, l) + std::pow(x, l)) /
                         (x * (1.0 - x));
      if (l >= 2)
        int_upper.update(cap - by_integral, loc);
      else
        int_upper.update(1e-12 - std::abs(cap - by_integral), loc);
    }
  }
  out.push_back(close_record("shannon", "symmetry-about-midpoint", symmetry));
  out.push_back(close_record("shannon", "concavity-finite-support", concavity));
  out.push_back(close_record("shannon", "increasing-first-half", rise));
  out.push_back(close_record("shannon", "decreasing-second-half", fall));
  out.push_back(close_record("shannon", "second-integral-vs-fd", integral_fd));
  out.push_back(close_record("shannon", "second-integral-lower-bound", int_lower));
  out.push_back(close_record("shannon", "second-integral-upper-bound", int_upper));
}

void shannon_inequality_cases(const TruncationPolicy& policy,
                              std::vector<VerificationRecord>& out) {
  Worst moment, binom;
  const Eigen::ArrayXd xs = log_grid(1e-3, 1e3, kLogGridPoints);
  for (double c : kNonnegC) {
    for (double n : orders_for(c)) {
      const FamilyParams params = make_family(c, n);
      for (long i = 0; i < xs.size(); ++i) {
        const InequalityMargin m = log_moment_bounds(params, xs[i], policy);
        const std::string loc = strfmt("c=%g n=%g x=%.6g", c, n, xs[i]);
        moment.update(m.lower_gap, loc);
        moment.update(m.upper_gap, loc);
      }
    }
  }
  for (long n = 1; n <= 12; ++n) {
    for (long i = 1; i <= 9; ++i) {
      const double x = 0.05 * static_cast<double>(i);
      const InequalityMargin m = binomial_log_moment_bounds(n, x);
      const std::string loc = strfmt("n=%ld x=%.6g", n, x);
      binom.update(m.lower_gap, loc);
      binom.update(m.upper_gap, loc);
    }
  }
  out.push_back(close_record("shannon", "log-moment-bounds", moment));
  out.push_back(close_record("shannon", "binomial-log-moment-bounds", binom));
}

VerificationRecord check_companion_convexity(const TruncationPolicy& policy) {
  Worst worst;
  const auto scan = [&](const FamilyParams& params, double lo, double hi) {
    const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(101, lo, hi);
    Eigen::ArrayXd phi(xs.size());
    for (long i = 0; i < xs.size(); ++i)
      phi[i] = companion_convexity_value(params, xs[i], policy);
    for (long i = 1; i + 1 < xs.size(); ++i) {
      const double dd = phi[i - 1] - 2.0 * phi[i] + phi[i + 1];
      worst.update(dd + 1e-8, strfmt("c=%g n=%g x=%.6g", params.c, params.n,
                                     xs[i]));
    }
  };
  scan(make_family(0.0, 1.0), 0.05, 6.0);
  scan(make_family(0.0, 2.5), 0.05, 6.0);
  scan(make_family(1.0, 2.0), 0.05, 6.0);
  for (long l : {2L, 3L, 4L})
    scan(make_family(-1.0, static_cast<double>(l)), 0.01, 0.99);
  return close_record("shannon", "companion-convexity", worst);
}

std::vector<VerificationRecord> run_shannon_suite(const SuiteOptions& opt) {
  const long l_max = opt.n_max > 0 ? std::min<long>(opt.n_max, 12) : 10;
  std::vector<VerificationRecord> out;
  out.push_back(check_normalization(opt.policy));
  out.push_back(check_weight_derivative(opt.policy));
  shannon_curvature_cases(opt.policy, out);
  shannon_cneg_cases(opt.policy, l_max, out);
  shannon_inequality_cases(opt.policy, out);
  out.push_back(check_companion_convexity(opt.policy));
  return out;
}

// ---- quadratic suite -----------------------------------------------------

std::vector<double> residual_points(const FamilyParams& params, long count) {
  // interior, bounded away from the coefficient roots {0,-1/(2c),-1/c}
  std::vector<double> pts;
  const double hi = params.c < 0.0 ? -1.0 / params.c : 2.5;
  for (long i = 0; i < count; ++i) {
    const double t =
        (static_cast<double>(i) + 0.7) / static_cast<double>(count);
    double x = 0.03 * hi + t * 0.94 * hi;
    if (params.c != 0.0) {
      const double mid = std::abs(-1.0 / (2.0 * params.c));
      if (std::abs(x - mid) < 0.02 * hi) x += 0.03 * hi;
    }
    pts.push_back(x);
  }
  return pts;
}

void residual_cases(const TruncationPolicy& policy,
                    std::vector<VerificationRecord>& out) {
  const FamilyParams fams[] = {make_family(-1.0, 3.0), make_family(0.0, 1.0),
                               make_family(1.0, 2.0)};
  Worst ode, heun, confluent, riccati, tsallis;
  for (const FamilyParams& params : fams) {
    for (double x : residual_points(params, 20)) {
      const std::string loc = strfmt("c=%g n=%g x=%.6g", params.c, params.n, x);
      ode.update(1e-5 - ode_residual(params, x, policy).relative(), loc);
      riccati.update(
          1e-5 - riccati_residual(params, x, policy,
                                  DerivSource::finite_difference).relative(),
          loc);
      tsallis.update(
          1e-5 - tsallis_ode_residual(params, x, policy,
                                      DerivSource::finite_difference).relative(),
          loc);
      if (params.c != 0.0)
        heun.update(
            1e-5 - heun_residual(params, x, policy,
                                 DerivSource::finite_difference).relative(),
            loc);
      else
        confluent.update(
            1e-5 - confluent_heun_residual(params.n, x, policy,
                                           DerivSource::finite_difference)
                       .relative(),
            loc);
    }
  }
  out.push_back(close_record("quadratic", "ode-residual", ode));
  out.push_back(close_record("quadratic", "heun-residual", heun));
  out.push_back(close_record("quadratic", "confluent-heun-residual", confluent));
  out.push_back(close_record("quadratic", "riccati-residual", riccati));
  out.push_back(close_record("quadratic", "tsallis-ode-residual", tsallis));
}

VerificationRecord check_tower_vs_fd(const TruncationPolicy& policy) {
  const FamilyParams fams[] = {make_family(-1.0, 4.0), make_family(0.0, 1.0),
                               make_family(1.0, 2.0)};
  Worst worst;
  for (const FamilyParams& params : fams) {
    for (double x : residual_points(params, 8)) {
      const DerivativeTower tower = derivative_tower(params, x, 3, policy);
      const auto s = [&](double t) { return s_value(params, t, policy).s; };
      for (int order : {2, 3}) {
        const double fd = num::central_diff(s, x, order).value;
        const double rel = std::abs(tower.values[order] - fd) /
                           std::max(std::abs(fd), 1e-12);
        worst.update(1e-4 - rel, strfmt("c=%g n=%g x=%.6g order=%d", params.c,
                                        params.n, x, order));
      }
    }
  }
  return close_record("quadratic", "tower-vs-finite-differences", worst);
}

void monotonicity_cases(const TruncationPolicy& policy, long l_max,
                        std::vector<VerificationRecord>& out) {
  // complete monotonicity, c >= 0
  {
    const std::pair<double, double> sets[] = {{0.0, 1.0}, {1.0, 2.0},
                                              {2.5, 3.0}};
    Worst worst;
    for (auto [c, n] : sets) {
      const FamilyParams params = make_family(c, n);
      const VerificationRecord rec = complete_monotonicity_scan(
          params, GridSpec{0.1, 10.0, 50}, 6, policy);
      worst.update(rec.worst_margin, rec.location);
    }
    out.push_back(close_record("quadratic", "complete-monotonicity", worst));
  }
  // convexity of S for c < 0, plus the fall/rise pattern
  {
    Worst convex, fall, rise;
    const auto scan = [&](const FamilyParams& params) {
      const double hi = -1.0 / params.c;
      const VerificationRecord rec = convexity_scan_s(
          params, GridSpec{0.0, hi, kFineGridPoints}, policy);
      convex.update(rec.worst_margin, rec.location);
      const Eigen::ArrayXd xs =
          Eigen::ArrayXd::LinSpaced(kFineGridPoints, 0.0, hi);
      Eigen::ArrayXd v(xs.size());
      for (long i = 0; i < xs.size(); ++i)
        v[i] = s_value(params, xs[i], policy).s;
      for (long i = 0; i + 1 < xs.size(); ++i) {
        const double d = v[i + 1] - v[i];
        const double mid = 0.5 * (xs[i] + xs[i + 1]);
        const std::string loc =
            strfmt("c=%g n=%g x=%.6g", params.c, params.n, mid);
        if (mid < 0.5 * hi)
          fall.update(1e-10 - d, loc);
        else
          rise.update(d + 1e-10, loc);
      }
    };
    for (long l = 1; l <= l_max; ++l)
      scan(make_family(-1.0, static_cast<double>(l)));
    for (long l = 1; l <= 6; ++l)
      scan(make_family(-0.5, 0.5 * static_cast<double>(l)));
    out.push_back(close_record("quadratic", "s-convexity-cneg", convex));
    out.push_back(close_record("quadratic", "s-decreasing-first-half", fall));
    out.push_back(close_record("quadratic", "s-increasing-second-half", rise));
  }
  // Renyi concave and increasing for c >= 0; Tsallis concave for all c
  {
    Worst renyi_concave, renyi_incr, tsallis_concave, tsallis_pattern;
    const auto scan = [&](const FamilyParams& params, double lo, double hi) {
      const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(101, lo, hi);
      Eigen::ArrayXd r(xs.size()), t(xs.size());
      for (long i = 0; i < xs.size(); ++i) {
        const QuadEval q = s_value(params, xs[i], policy);
        r[i] = q.renyi;
        t[i] = q.tsallis;
      }
      for (long i = 1; i + 1 < xs.size(); ++i) {
        const std::string loc =
            strfmt("c=%g n=%g x=%.6g", params.c, params.n, xs[i]);
        const double ddt = t[i - 1] - 2.0 * t[i] + t[i + 1];
        tsallis_concave.update(1e-8 - ddt, loc);
        if (params.c >= 0.0) {
          const double ddr = r[i - 1] - 2.0 * r[i] + r[i + 1];
          renyi_concave.update(1e-8 - ddr, loc);
        }
      }
      for (long i = 0; i + 1 < xs.size(); ++i) {
        const double mid = 0.5 * (xs[i] + xs[i + 1]);
        const std::string loc =
            strfmt("c=%g n=%g x=%.6g", params.c, params.n, mid);
        if (params.c >= 0.0) {
          renyi_incr.update(r[i + 1] - r[i] + 1e-10, loc);
          tsallis_pattern.update(t[i + 1] - t[i] + 1e-10, loc);
        } else if (mid < 0.5 * hi) {
          tsallis_pattern.update(t[i + 1] - t[i] + 1e-10, loc);
        } else {
          tsallis_pattern.update(t[i] - t[i + 1] + 1e-10, loc);
        }
      }
    };
    for (double c : kNonnegC) scan(make_family(c, c + 1.5), 0.0, 8.0);
    for (long l = 1; l <= l_max; ++l)
      scan(make_family(-1.0, static_cast<double>(l)), 0.0, 1.0);
    out.push_back(close_record("quadratic", "renyi-concavity", renyi_concave));
    out.push_back(close_record("quadratic", "renyi-increasing", renyi_incr));
    out.push_back(close_record("quadratic", "tsallis-concavity", tsallis_concave));
    out.push_back(close_record("quadratic", "tsallis-pattern", tsallis_pattern));
  }
  // logarithmic convexity: asserted for c >= 0, reported for c < 0
  {
    Worst asserted;
    for (auto [c, n] : {std::pair<double, double>{0.0, 1.0}, {1.0, 2.0}}) {
      const VerificationRecord rec = log_convexity_probe(
          make_family(c, n), GridSpec{0.0, 8.0, 161}, policy);
      asserted.update(rec.worst_margin + 1e-8, rec.location);
    }
    out.push_back(close_record("quadratic", "log-s-convexity", asserted));
    const VerificationRecord probe = log_convexity_probe(
        make_family(-1.0, 4.0), GridSpec{0.0, 1.0, 201}, policy);
    out.push_back(probe);
  }
}

VerificationRecord check_s_symmetry(const TruncationPolicy& policy,
                                    long l_max) {
  Worst worst;
  for (long l = 1; l <= l_max; ++l) {
    const FamilyParams params = make_family(-1.0, static_cast<double>(l));
    for (long i = 0; i <= 20; ++i) {
      const double t = 0.5 * static_cast<double>(i) / 20.0;
      const double left = s_value(params, 0.5 - t, policy).s;
      const double right = s_value(params, 0.5 + t, policy).s;
      worst.update(1e-12 - std::abs(left - right),
                   strfmt("l=%ld t=%.6g", l, t));
    }
  }
  return close_record("quadratic", "s-symmetry", worst);
}

VerificationRecord check_float_vs_exact(const TruncationPolicy& policy) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<long> num(0, 1000);
  std::uniform_int_distribution<long> l_dist(1, 10);
  Worst worst;
  for (long i = 0; i < kRationalCrossChecks; ++i) {
    const long l = l_dist(rng);
    const long p = num(rng);
    const exact::Rational x(p, 1000);
    const FamilyParams params = make_family(-1.0, static_cast<double>(l));
    const double exact_val = exact::to_double(exact::s_poly(l)(x));
    const double float_val =
        s_value(params, static_cast<double>(p) / 1000.0, policy).s;
    worst.update(1e-12 - std::abs(exact_val - float_val),
                 strfmt("l=%ld x=%ld/1000", l, p));
  }
  return close_record("quadratic", "float-vs-exact-s", worst);
}

std::vector<VerificationRecord> run_quadratic_suite(const SuiteOptions& opt) {
  const long l_max = opt.n_max > 0 ? std::min<long>(opt.n_max, 12) : 10;
  std::vector<VerificationRecord> out;
  residual_cases(opt.policy, out);
  out.push_back(check_tower_vs_fd(opt.policy));
  monotonicity_cases(opt.policy, l_max, out);
  out.push_back(check_s_symmetry(opt.policy, l_max));
  out.push_back(check_float_vs_exact(opt.policy));
  return out;
}

// ---- exact suite ---------------------------------------------------------

std::vector<VerificationRecord> run_exact_suite(const SuiteOptions& opt) {
  using exact::BigInt;
  using exact::Rational;
  using exact::RationalPoly;

  const long linear_cap = opt.n_max > 0 ? opt.n_max : 50;
  const long quad_cap = std::min<long>(linear_cap, 30);

  std::vector<VerificationRecord> out;
  Worst central, central_pos, closed_forms, f_at_one, slope_identity,
      shift_nonneg, cnk_pos, deriv_one, bernstein, second_grid, ode_poly,
      tsallis_neg, saw_sym;

  for (long n = 1; n <= linear_cap; ++n) {
    const std::string loc = strfmt("n=%ld", n);
    const RationalPoly s = exact::s_poly(n);

    // central form (construction self-checks the recentering); positivity
    const exact::CentralForm form = exact::central_form(n);
    central.update(0.0, loc);
    for (long k = 0; k <= n; ++k)
      central_pos.update(form.a[k] > 0 ? 1.0 : -1.0,
                         strfmt("n=%ld k=%ld", n, k));

    // closed forms at 1/2: S, S'', S''''
    {
      const Rational s_half(exact::binomial(2 * n, n),
                            exact::BigInt(1) << (2 * n));
      bool ok = form.a[0] == s_half;
      if (n >= 1) {
        const Rational expect(exact::binomial(2 * n - 2, n - 1) * 16,
                              exact::BigInt(1) << (2 * n));
        ok = ok && exact::central_derivative(n, 1) == expect;
      }
      if (n >= 2) {
        const Rational expect(exact::binomial(2 * n - 4, n - 2) * 9 * 256,
                              exact::BigInt(1) << (2 * n));
        ok = ok && exact::central_derivative(n, 2) == expect;
      }
      closed_forms.update(ok ? 1.0 : -1.0, loc);
    }

    // f_n(1) = 0 and the slope identity
    f_at_one.update(exact::f_poly(n)(Rational(1)) == 0 ? 1.0 : -1.0, loc);
    slope_identity.update(exact::f_slope_identity(n) ? 1.0 : -1.0, loc);

    // shift expansion nonnegativity
    shift_nonneg.update(exact::shift_expansion_nonneg(n).worst_margin, loc);

    // Bernstein image of the saw nodes
    const std::vector<Rational> nodes = exact::saw_nodes(n);
    bernstein.update(
        exact::bernstein_apply(2 * n, nodes) == s ? 1.0 : -1.0, loc);
    for (long j = 0; j <= 2 * n; ++j)
      saw_sym.update(nodes[j] == nodes[2 * n - j] ? 1.0 : -1.0,
                     strfmt("n=%ld j=%ld", n, j));

    // sign of S'' on the 1/1000 grid via integer Horner: the coefficients
    // are integers, so S''(j/1000) * 1000^deg is an exact integer
    {
      const RationalPoly spp = s.derivative().derivative();
      const long d = spp.degree();
      std::vector<BigInt> scaled(d + 1);
      for (long i = 0; i <= d; ++i) {
        BigInt num = numerator(spp.coeff(i));
        for (long e = 0; e < d - i; ++e) num *= 1000;
        scaled[i] = num;
      }
      for (long j = 0; j <= 1000; ++j) {
        BigInt acc = 0;
        for (long i = d; i >= 0; --i) acc = acc * j + scaled[i];
        second_grid.update(acc >= 0 ? 1.0 : -1.0,
                           strfmt("n=%ld x=%ld/1000", n, j));
      }
    }
  }

  for (long n = 1; n <= quad_cap; ++n) {
    const std::string loc = strfmt("n=%ld", n);
    const RationalPoly s = exact::s_poly(n);

    const exact::CnkDecomposition dec = exact::cnk_solve(n);
    for (long k = 1; k <= n; ++k)
      cnk_pos.update(dec.c[k - 1] > 0 ? 1.0 : -1.0,
                     strfmt("n=%ld k=%ld", n, k));

    for (long i = 0; i <= 2 * n - 1; ++i) {
      const auto [by_poly, by_formula] = exact::derivative_at_one(n, i);
      const bool ok = by_poly == by_formula && by_poly >= 0;
      deriv_one.update(ok ? 1.0 : -1.0, strfmt("n=%ld i=%ld", n, i));
    }

    ode_poly.update(exact::s_ode_residual_poly(n, s).is_zero() ? 1.0 : -1.0,
                    loc);
    {
      // linearity: the residual of T = 1 - y is the negation of the
      // residual of y for any y, not only solutions
      RationalPoly y = s + RationalPoly::monomial(3);
      RationalPoly one_minus_y =
          RationalPoly(std::vector<Rational>{Rational(1)}) - y;
      const RationalPoly c_poly(
          std::vector<Rational>{Rational(2 * n), Rational(-4 * n)});
      const RationalPoly res_t =
          exact::s_ode_residual_poly(n, one_minus_y) - c_poly;
      RationalPoly neg = exact::s_ode_residual_poly(n, y);
      neg *= Rational(-1);
      tsallis_neg.update(res_t == neg ? 1.0 : -1.0, loc);
    }
  }

  out.push_back(close_record("exact", "central-form-recentering", central));
  out.push_back(close_record("exact", "central-coefficients-positive", central_pos));
  out.push_back(close_record("exact", "midpoint-closed-forms", closed_forms));
  out.push_back(close_record("exact", "f-at-one-zero", f_at_one));
  out.push_back(close_record("exact", "f-slope-identity", slope_identity));
  out.push_back(close_record("exact", "shift-expansion-nonneg", shift_nonneg));
  out.push_back(close_record("exact", "cnk-positivity", cnk_pos));
  out.push_back(close_record("exact", "derivative-at-one", deriv_one));
  out.push_back(close_record("exact", "bernstein-image", bernstein));
  out.push_back(close_record("exact", "saw-nodes-symmetric", saw_sym));
  out.push_back(close_record("exact", "second-derivative-grid", second_grid));
  out.push_back(close_record("exact", "ode-polynomial-identity", ode_poly));
  out.push_back(close_record("exact", "tsallis-residual-negation", tsallis_neg));
  return out;
}

}  // namespace

std::vector<VerificationRecord> run_suite(const std::string& name,
                                          const SuiteOptions& options) {
  if (name == "shannon") return run_shannon_suite(options);
  if (name == "quadratic") return run_quadratic_suite(options);
  if (name == "exact") return run_exact_suite(options);
  if (name == "all") {
    std::vector<VerificationRecord> out = run_shannon_suite(options);
    auto more = run_quadratic_suite(options);
    out.insert(out.end(), more.begin(), more.end());
    more = run_exact_suite(options);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }
  throw UnsupportedParams("unknown suite: " + name);
}

std::vector<ProbeRow> log_convexity_probe_sweep(double c, long l_max,
                                                long steps) {
  if (!(c < 0.0))
    throw UnsupportedParams("log-convexity probe targets c < 0 only");
  if (l_max < 1 || steps < 3)
    throw DomainError("probe: need l_max >= 1 and steps >= 3");
  const TruncationPolicy policy{};
  std::vector<ProbeRow> rows;
  for (long l = 1; l <= l_max; ++l) {
    const FamilyParams params = make_family(c, -c * static_cast<double>(l));
    const GridSpec grid{0.0, -1.0 / c, steps};
    const Eigen::ArrayXd xs = grid.points();
    Eigen::ArrayXd vals(xs.size());
    for (long i = 0; i < xs.size(); ++i)
      vals[i] = std::log(s_value(params, xs[i], policy).s);
    const double h2 = grid.spacing() * grid.spacing();
    double min_dd = std::numeric_limits<double>::infinity();
    double argmin = xs[1];
    for (long i = 1; i + 1 < xs.size(); ++i) {
      const double dd = (vals[i - 1] - 2.0 * vals[i] + vals[i + 1]) / h2;
      if (dd < min_dd) {
        min_dd = dd;
        argmin = xs[i];
      }
    }
    rows.push_back({c, l, min_dd, argmin});
  }
  return rows;
}

}  // namespace baskakov::verify
