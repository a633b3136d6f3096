#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "baskakov/exact.hpp"
#include "baskakov/family.hpp"
#include "baskakov/numerics.hpp"

using namespace baskakov;

namespace {

const TruncationPolicy kPolicy{};

double exact_binomial_weight(long l, long k, double y) {
  const double coeff = exact::to_double(exact::Rational(exact::binomial(l, k)));
  return coeff * std::pow(y, k) * std::pow(1.0 - y, l - k);
}

}  // namespace

TEST_CASE("make_family validates and classifies") {
  const FamilyParams binom = make_family(-1.0, 3.0);
  CHECK(binom.finite());
  CHECK(binom.l == 3);
  CHECK(binom.domain().hi == doctest::Approx(1.0));

  const FamilyParams poisson = make_family(0.0, 1.0);
  CHECK(!poisson.finite());

  const FamilyParams scaled = make_family(-0.5, 1.5);
  CHECK(scaled.l == 3);
  CHECK(scaled.domain().hi == doctest::Approx(2.0));

  CHECK_THROWS_AS(make_family(-1.0, 2.5), NonIntegerL);
  CHECK_THROWS_AS(make_family(0.0, 0.0), InvalidOrder);
  CHECK_THROWS_AS(make_family(1.0, 0.5), InvalidOrder);
  CHECK_THROWS_AS(make_family(-1.0, -3.0), InvalidOrder);
}

TEST_CASE("make_family accepts round-tripped orders") {
  const double c = -0.3;
  const FamilyParams params = make_family(c, 0.3 * 7 * (1.0 / 0.3) * 0.3);
  CHECK(params.l == 7);
}

TEST_CASE("non-finite parameters and points are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(make_family(nan, 1.0), InvalidOrder);
  CHECK_THROWS_AS(make_family(-1.0, nan), InvalidOrder);
  CHECK_THROWS_AS(make_family(0.0, inf), InvalidOrder);
  CHECK_THROWS_AS(weight(make_family(0.0, 1.0), 0, inf), DomainError);
  CHECK_THROWS_AS(weight(make_family(0.0, 1.0), 0, nan), DomainError);
  CHECK_THROWS_AS(weight(make_family(-1.0, 2.0), 0, nan), DomainError);
}

TEST_CASE("weight point values") {
  CHECK(weight(make_family(0.0, 1.0), 0, 0.0).value == 1.0);
  CHECK(weight(make_family(-1.0, 2.0), 1, 0.5).value ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(weight(make_family(1.0, 2.0), 0, 1.0).value ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("weight edges: x = 0 and x = -1/c") {
  const FamilyParams params = make_family(-0.5, 2.0);  // l = 4
  CHECK(weight(params, 0, 0.0).value == 1.0);
  for (long k = 1; k <= 4; ++k) CHECK(weight(params, k, 0.0).value == 0.0);
  CHECK(weight(params, 4, 2.0).value == 1.0);
  for (long k = 0; k < 4; ++k) CHECK(weight(params, k, 2.0).value == 0.0);
  CHECK(weight(params, 7, 1.0).value == 0.0);  // k > l is exactly zero
}

TEST_CASE("weight matches the plain binomial formula for c < 0") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = trial % 2 == 0 ? -1.0 : -0.5;
    const long l = 1 + static_cast<long>(uni(rng) * 12.0);
    const FamilyParams params = make_family(c, -c * static_cast<double>(l));
    const double x = uni(rng) * (-1.0 / c);
    const long k = static_cast<long>(uni(rng) * static_cast<double>(l + 1));
    const double expected = exact_binomial_weight(l, k, -c * x);
    const double got = weight(params, k, x).value;
    CHECK(std::abs(got - expected) <= 1e-14 * std::max(expected, 1e-30));
  }
}

TEST_CASE("weights are nonnegative and log-consistent") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}[trial % 6];
    FamilyParams params;
    double x;
    if (c < 0.0) {
      params = make_family(c, -c * (1 + static_cast<long>(uni(rng) * 9)));
      x = uni(rng) * (-1.0 / c);
    } else {
      params = make_family(c, c + 0.2 + 3.0 * uni(rng));
      x = 6.0 * uni(rng);
    }
    const long k = static_cast<long>(uni(rng) * 12);
    const WeightEval w = weight(params, k, x);
    CHECK(w.value >= 0.0);
    CHECK(w.value <= 1.0);
    if (w.value > 0.0)
      CHECK(w.value == doctest::Approx(std::exp(w.log_value)).epsilon(1e-15));
  }
}

TEST_CASE("weight rejects x outside the domain") {
  CHECK_THROWS_AS(weight(make_family(-1.0, 2.0), 0, 1.2), DomainError);
  CHECK_THROWS_AS(weight(make_family(0.0, 1.0), 0, -0.1), DomainError);
}

TEST_CASE("weight_derivative closed cases") {
  const FamilyParams poisson = make_family(0.0, 1.0);
  for (double x : {0.3, 1.0, 2.5}) {
    CHECK(weight_derivative(poisson, 0, x) ==
          doctest::Approx(-std::exp(-x)).epsilon(1e-12));
  }
  // l = 1 exercises the degenerate shifted family (point mass at k = 0)
  const FamilyParams bernoulli = make_family(-1.0, 1.0);
  CHECK(weight_derivative(bernoulli, 1, 0.5) == doctest::Approx(1.0));
  CHECK(weight_derivative(bernoulli, 0, 0.5) == doctest::Approx(-1.0));
}

TEST_CASE("weight_derivative agrees with finite differences") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double c = std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}[trial % 6];
    FamilyParams params;
    double x;
    if (c < 0.0) {
      params = make_family(c, -c * (1 + static_cast<long>(uni(rng) * 7)));
      x = (0.1 + 0.8 * uni(rng)) * (-1.0 / c);
    } else {
      params = make_family(c, c + 0.3 + 2.0 * uni(rng));
      x = 0.1 + 4.0 * uni(rng);
    }
    const long k = static_cast<long>(uni(rng) * (params.n * x + 4.0));
    const double wd = weight_derivative(params, k, x);
    const double fd = num::central_diff(
        [&](double t) { return weight(params, k, t).value; }, x, 1).value;
    CHECK(std::abs(fd - wd) <= 1e-6 * std::max(std::abs(wd), 1e-3));
  }
}

TEST_CASE("weight_derivative requires interior x") {
  const FamilyParams params = make_family(-1.0, 3.0);
  CHECK_THROWS_AS(weight_derivative(params, 1, 0.0), DomainError);
  CHECK_THROWS_AS(weight_derivative(params, 1, 1.0), DomainError);
}

TEST_CASE("truncation_index: finite support is exact") {
  const Truncation t =
      truncation_index(make_family(-1.0, 5.0), 0.3, kPolicy);
  CHECK(t.k == 5);
  CHECK(t.tail_bound == 0.0);
}

TEST_CASE("truncation_index certifies the Poisson tail") {
  const FamilyParams params = make_family(0.0, 1.0);
  const Truncation t = truncation_index(params, 1.0, kPolicy);
  CHECK(t.tail_bound <= 1e-12);
  // independent tail: sum_{k>K} e^-1/k! by direct summation
  double tail = 0.0;
  double term = std::exp(-1.0);
  for (long k = 1; k <= 200; ++k) {
    term /= static_cast<double>(k);
    if (k > t.k) tail += term;
  }
  CHECK(tail <= t.tail_bound);
}

TEST_CASE("truncation cap raises CapExceeded with diagnostics") {
  const TruncationPolicy tight{1e-12, 16};
  try {
    truncation_index(make_family(1.0, 2.0), 50.0, tight);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.k >= 15);
    CHECK(e.achieved_bound > 1e-12);
  }
}

TEST_CASE("policy validation") {
  CHECK_THROWS(truncation_index(make_family(0.0, 1.0), 1.0,
                                TruncationPolicy{0.0, 100}));
  CHECK_THROWS(truncation_index(make_family(0.0, 1.0), 1.0,
                                TruncationPolicy{1e-12, 4}));
}

TEST_CASE("mass_check point values") {
  CHECK(std::abs(mass_check(make_family(-1.0, 4.0), 0.7, kPolicy) - 1.0) <=
        1e-14);
  CHECK(std::abs(mass_check(make_family(0.0, 1.0), 2.0, kPolicy) - 1.0) <=
        1e-12);
  CHECK(mass_check(make_family(1.0, 2.0), 0.0, kPolicy) == 1.0);
}

TEST_CASE("normalization holds across random parameters") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const double c = std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}[trial % 6];
    FamilyParams params;
    double x;
    if (c < 0.0) {
      params = make_family(c, -c * (1 + static_cast<long>(uni(rng) * 9)));
      x = uni(rng) * (-1.0 / c);
    } else {
      params = make_family(c, c + 0.1 + 4.0 * uni(rng));
      x = uni(rng) * 40.0;
    }
    const Truncation t = truncation_index(params, x, kPolicy);
    CHECK(std::abs(mass_check(params, x, kPolicy) - 1.0) <=
          t.tail_bound + 1e-12);
  }
}

TEST_CASE("window entries match direct weight evaluation") {
  for (const FamilyParams& params :
       {make_family(-1.0, 6.0), make_family(0.0, 1.5), make_family(1.0, 2.0)}) {
    const double x = params.c < 0.0 ? 0.37 : 2.1;
    const WeightWindow win = weight_window(params, x, kPolicy);
    for (long k = win.k_lo; k <= win.k_hi; ++k) {
      const double direct = weight(params, k, x).value;
      const double from_window = win.p[k - win.k_lo];
      CHECK(std::abs(from_window - direct) <=
            1e-12 * std::max(direct, 1e-300));
    }
  }
}
