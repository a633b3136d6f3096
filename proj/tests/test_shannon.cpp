#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "baskakov/numerics.hpp"
#include "baskakov/shannon.hpp"
#include "baskakov/verification.hpp"

using namespace baskakov;

namespace {

const TruncationPolicy kPolicy{};

// brute-force Poisson entropy oracle: sum e^-lam lam^k/k! (lam - k log lam + log k!)
double poisson_entropy_oracle(double lambda, int terms) {
  double h = 0.0;
  for (int k = 0; k < terms; ++k) {
    const double logp = k * std::log(lambda) - std::lgamma(k + 1.0) - lambda;
    h -= std::exp(logp) * logp;
  }
  return h;
}

}  // namespace

TEST_CASE("shannon: point masses have zero entropy") {
  CHECK(shannon(make_family(0.0, 1.0), 0.0, kPolicy).h == 0.0);
  CHECK(shannon(make_family(-1.0, 3.0), 0.0, kPolicy).h == 0.0);
  CHECK(shannon(make_family(-1.0, 3.0), 1.0, kPolicy).h == 0.0);
}

TEST_CASE("shannon: two-point uniform gives log 2") {
  CHECK(shannon(make_family(-1.0, 1.0), 0.5, kPolicy).h ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("shannon: Poisson series against the brute-force oracle") {
  // the certified tail bound covers the difference to the 60-term oracle
  const ShannonEval eval = shannon(make_family(0.0, 1.0), 1.0, kPolicy);
  CHECK(std::abs(eval.h - poisson_entropy_oracle(1.0, 60)) <=
        eval.tail_bound + 1e-13);
  // a tighter policy pins the value itself
  const TruncationPolicy tight{1e-16, 1 << 20};
  const double got = shannon(make_family(0.0, 1.0), 1.0, tight).h;
  CHECK(std::abs(got - poisson_entropy_oracle(1.0, 60)) <= 1e-13);
  const double got5 = shannon(make_family(0.0, 2.0), 2.5, tight).h;
  CHECK(std::abs(got5 - poisson_entropy_oracle(5.0, 120)) <= 1e-13);
}

TEST_CASE("shannon tail bound covers a wider truncation") {
  const FamilyParams params = make_family(1.0, 2.0);
  const TruncationPolicy loose{1e-6, 1 << 20};
  const ShannonEval rough = shannon(params, 3.0, loose);
  const ShannonEval sharp = shannon(params, 3.0, kPolicy);
  CHECK(std::abs(rough.h - sharp.h) <= rough.tail_bound + 1e-12);
}

TEST_CASE("shannon_prime_series: positive and matching finite differences") {
  for (double c : {0.0, 0.5, 1.0}) {
    const FamilyParams params = make_family(c, c + 1.0);
    for (double x : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0}) {
      CHECK(shannon_prime_series(params, x, kPolicy) > 0.0);
    }
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double c = std::vector<double>{0.0, 0.5, 1.0}[trial % 3];
    const FamilyParams params = make_family(c, c + 0.4 + 2.0 * uni(rng));
    const double x = 0.2 + 3.0 * uni(rng);
    const double series = shannon_prime_series(params, x, kPolicy);
    const double fd = num::central_diff(
        [&](double t) { return shannon(params, t, kPolicy).h; }, x, 1).value;
    CHECK(std::abs(series - fd) <= 1e-5 * std::abs(series));
  }
}

TEST_CASE("shannon_prime_series grows like -n log x as x -> 0+") {
  for (double c : {0.0, 1.0}) {
    const FamilyParams params = make_family(c, c + 1.0);
    const double x = 1e-8;
    const double ratio =
        shannon_prime_series(params, x, kPolicy) / (-params.n * std::log(x));
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("shannon_prime_series at (c=0, n=1, x=1) lies in (0,1]") {
  const double v = shannon_prime_series(make_family(0.0, 1.0), 1.0, kPolicy);
  CHECK(v > 0.0);
  CHECK(v <= 1.0);
}

TEST_CASE("shannon_prime_series rejects c < 0") {
  CHECK_THROWS_AS(shannon_prime_series(make_family(-1.0, 2.0), 0.3, kPolicy),
                  UnsupportedParams);
}

TEST_CASE("shannon_prime for c < 0 matches finite differences") {
  for (long l : {1L, 3L, 6L}) {
    const FamilyParams params = make_family(-1.0, static_cast<double>(l));
    for (double x : {0.15, 0.33, 0.71}) {
      const double termwise = shannon_prime(params, x, kPolicy);
      const double fd = num::central_diff(
          [&](double t) { return shannon(params, t, kPolicy).h; }, x, 1).value;
      CHECK(std::abs(termwise - fd) <=
            1e-6 * std::max(std::abs(termwise), 1e-6));
    }
  }
}

TEST_CASE("shannon_second_series: sign, bounds, finite differences") {
  for (double c : {0.0, 0.5, 1.0, 2.0}) {
    const FamilyParams params = make_family(c, c + 1.5);
    for (double x : {0.05, 0.3, 1.0, 4.0}) {
      const double hpp = shannon_second_series(params, x, kPolicy);
      const double lo = -params.n / (x * (1.0 + c * x));
      CHECK(hpp < 0.0);
      CHECK(hpp > lo);
      const double fd = num::central_diff(
          [&](double t) { return shannon(params, t, kPolicy).h; }, x, 2).value;
      CHECK(std::abs(hpp - fd) <= 1e-4 * std::abs(hpp));
    }
  }
}

TEST_CASE("shannon_second_integral: l = 1 reduces to the pole term") {
  const FamilyParams params = make_family(-1.0, 1.0);
  const double x = 0.3;
  CHECK(shannon_second_integral(params, x) ==
        doctest::Approx(-1.0 / (x * (1.0 - x))).epsilon(1e-14));
}

TEST_CASE("shannon_second_integral matches finite differences") {
  for (long l : {2L, 3L, 5L}) {
    const FamilyParams params = make_family(-1.0, static_cast<double>(l));
    for (double x : {0.2, 0.5, 0.8}) {
      const double integral = shannon_second_integral(params, x);
      const double fd = num::central_diff(
          [&](double t) { return shannon(params, t, kPolicy).h; }, x, 2).value;
      CHECK(std::abs(integral - fd) <= 1e-6 * std::abs(integral));
    }
  }
  // a rescaled family (c = -0.5) goes through the same formula
  const FamilyParams params = make_family(-0.5, 1.5);
  const double fd = num::central_diff(
      [&](double t) { return shannon(params, t, kPolicy).h; }, 1.1, 2).value;
  CHECK(std::abs(shannon_second_integral(params, 1.1) - fd) <=
        1e-6 * std::abs(fd));
}

TEST_CASE("shannon_second_integral bounds for c < 0") {
  for (long l : {2L, 4L, 7L}) {
    const FamilyParams params = make_family(-1.0, static_cast<double>(l));
    for (double x : {0.1, 0.35, 0.5, 0.9}) {
      const double hpp = shannon_second_integral(params, x);
      const double pole = -params.n / (x * (1.0 - x));
      const double cap = -params.n *
                         (std::pow(1.0 - x, l) + std::pow(x, l)) /
                         (x * (1.0 - x));
      CHECK(hpp > pole);   // the integral term is positive for l >= 2
      CHECK(hpp < cap);
      CHECK(cap < 0.0);
    }
  }
}

TEST_CASE("shannon_integral_rep: values and symmetry") {
  CHECK(shannon_integral_rep(1, 0.5) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  for (long l = 1; l <= 6; ++l) {
    const FamilyParams params = make_family(-1.0, static_cast<double>(l));
    for (int i = 1; i <= 9; ++i) {
      const double y = 0.1 * i;
      const double rep = shannon_integral_rep(l, y);
      const double series = shannon(params, y, kPolicy).h;
      CHECK(std::abs(rep - series) <= 1e-8);
      CHECK(std::abs(rep - shannon_integral_rep(l, 1.0 - y)) <= 1e-12);
    }
  }
}

TEST_CASE("companion function is discretely convex") {
  const auto second_diffs_ok = [&](const FamilyParams& params, double lo,
                                   double hi) {
    const int pts = 81;
    double worst = 1.0;
    std::vector<double> phi(pts);
    for (int i = 0; i < pts; ++i) {
      const double x = lo + (hi - lo) * i / (pts - 1.0);
      phi[i] = companion_convexity_value(params, x, kPolicy);
    }
    for (int i = 1; i + 1 < pts; ++i)
      worst = std::min(worst, phi[i - 1] - 2.0 * phi[i] + phi[i + 1]);
    return worst >= -1e-8;
  };
  CHECK(second_diffs_ok(make_family(0.0, 1.0), 0.05, 5.0));
  CHECK(second_diffs_ok(make_family(1.0, 2.0), 0.05, 5.0));
  for (long l : {2L, 3L, 4L})
    CHECK(second_diffs_ok(make_family(-1.0, static_cast<double>(l)), 0.02,
                          0.98));
}

TEST_CASE("companion function rejects the excluded c < 0, l = 1 case") {
  CHECK_THROWS_AS(companion_convexity_value(make_family(-1.0, 1.0), 0.5,
                                            kPolicy),
                  UnsupportedParams);
}

TEST_CASE("log-moment bounds at the Poisson x = 1 instance") {
  // log x <= sum e^-x x^k/k! log(k+1) <= log(x+1) at x = 1, n = 1
  double mid = 0.0;
  for (int k = 0; k < 60; ++k) {
    const double logp = -1.0 - std::lgamma(k + 1.0);
    mid += std::exp(logp) * std::log(k + 1.0);
  }
  const InequalityMargin m =
      log_moment_bounds(make_family(0.0, 1.0), 1.0, kPolicy);
  CHECK(m.pass());
  CHECK(std::abs(m.lower_gap - mid) <= 1e-12);            // lower bound is 0
  CHECK(std::abs(m.upper_gap - (std::log(2.0) - mid)) <= 1e-12);
}

TEST_CASE("log-moment bounds hold on a log-spaced grid") {
  for (double c : {0.0, 0.5, 1.0, 2.0}) {
    const FamilyParams params = make_family(c, c + 1.0);
    for (int i = 0; i <= 30; ++i) {
      const double x = std::pow(10.0, -3.0 + 6.0 * i / 30.0);
      const InequalityMargin m = log_moment_bounds(params, x, kPolicy);
      CHECK(m.lower_gap >= 0.0);
      CHECK(m.upper_gap >= 0.0);
    }
  }
}

TEST_CASE("log-moment gaps shrink toward zero as x grows (c = 0)") {
  const FamilyParams params = make_family(0.0, 1.0);
  InequalityMargin prev = log_moment_bounds(params, 1.0, kPolicy);
  for (double x : {3.0, 10.0, 30.0, 100.0}) {
    const InequalityMargin cur = log_moment_bounds(params, x, kPolicy);
    CHECK(cur.upper_gap < prev.upper_gap);
    CHECK(cur.lower_gap < prev.lower_gap);
    prev = cur;
  }
}

TEST_CASE("shannon suite: no failing record") {
  verify::SuiteOptions opts;
  opts.n_max = 6;  // trimmed sweep; the acceptance binary runs the full one
  CHECK(!verify::any_failure(verify::run_suite("shannon", opts)));
}

TEST_CASE("binomial log-moment bounds: strict margins and special values") {
  for (long n = 1; n <= 12; ++n) {
    for (int i = 1; i <= 9; ++i) {
      const InequalityMargin m = binomial_log_moment_bounds(n, 0.05 * i);
      CHECK(m.lower_gap > 0.0);
      CHECK(m.upper_gap > 0.0);
    }
  }
  // midpoint antisymmetry: the weighted sum vanishes at x = 1/2
  for (long n : {1L, 4L, 9L}) {
    const FamilyParams params = make_family(-1.0, static_cast<double>(n));
    double mid = 0.0;
    for (long k = 0; k <= n; ++k)
      mid += weight(params, k, 0.5).value *
             std::log(static_cast<double>(k + 1) /
                      static_cast<double>(n + 1 - k));
    CHECK(std::abs(mid) <= 1e-14);
  }
  // n = 1, x = 1/4: the sum is -(1/2) log 2
  const InequalityMargin m = binomial_log_moment_bounds(1, 0.25);
  const double mid = std::log(0.25 / 0.75) + m.lower_gap;
  CHECK(std::abs(mid - (-0.5 * std::log(2.0))) <= 1e-14);
}

TEST_CASE("entropy symmetry about the domain midpoint (c < 0)") {
  CHECK(symmetry_check(make_family(-1.0, 3.0), 0.2, kPolicy) <= 1e-12);
  CHECK(symmetry_check(make_family(-0.5, 2.0), 0.77, kPolicy) <= 1e-12);
  CHECK(symmetry_check(make_family(-1.0, 3.0), 0.0, kPolicy) == 0.0);
  CHECK(symmetry_check(make_family(-1.0, 3.0), 0.5, kPolicy) == 0.0);
}

TEST_CASE("H' sign pattern for c = 0 up to order 4") {
  // light complete-monotonicity probe of H': signs alternate
  const FamilyParams params = make_family(0.0, 1.0);
  const auto hp = [&](double t) { return shannon_prime_series(params, t, kPolicy); };
  for (double x : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(hp(x) > 0.0);
    for (int order = 1; order <= 3; ++order) {
      const double d = num::central_diff(hp, x, order).value;
      CHECK((order % 2 == 0 ? d : -d) > 0.0);
    }
  }
}

TEST_CASE("shannon_report populates derivatives where defined") {
  const ShannonEval at_zero =
      shannon_report(make_family(0.0, 1.0), 0.0, kPolicy);
  CHECK(!at_zero.h_prime.has_value());
  const ShannonEval poisson =
      shannon_report(make_family(0.0, 1.0), 1.0, kPolicy);
  CHECK(poisson.h_prime.has_value());
  CHECK(*poisson.h_second < 0.0);
  const ShannonEval binom =
      shannon_report(make_family(-1.0, 2.0), 0.25, kPolicy);
  CHECK(binom.h_prime.has_value());
  CHECK(binom.h_second.has_value());
}
