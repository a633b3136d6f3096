#include "baskakov/numerics.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace baskakov::num {

double mu(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double h = s - 1.0;
  const double ls = std::log1p(h);
  if (ls == 0.0) return 1.0;
  return h / ls;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void base_rule(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

constexpr int kGradedPanels = 48;  // breakpoints 2^-m, m = 48..0

QuadratureRule build_composite(int npoints) {
  std::vector<double> bx, bw;
  base_rule(npoints, bx, bw);

  std::vector<double> lo(kGradedPanels + 1), hi(kGradedPanels + 1);
  lo[0] = 0.0;
  hi[0] = std::ldexp(1.0, -kGradedPanels);
  for (int m = 1; m <= kGradedPanels; ++m) {
    lo[m] = hi[m - 1];
    hi[m] = 2.0 * lo[m];
  }

  const long total = static_cast<long>(kGradedPanels + 1) * npoints;
  QuadratureRule rule;
  rule.nodes.resize(total);
  rule.weights.resize(total);
  long j = 0;
  for (int m = 0; m <= kGradedPanels; ++m) {
    const double len = hi[m] - lo[m];
    for (int i = 0; i < npoints; ++i, ++j) {
      rule.nodes[j] = lo[m] + len * 0.5 * (bx[i] + 1.0);
      rule.weights[j] = len * 0.5 * bw[i];
    }
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre_01_rule(int npoints) {
  if (npoints != 32 && npoints != 64 && npoints != 128)
    throw UnsupportedParams("gauss_legendre_01: npoints must be 32, 64 or 128");
  static std::mutex m;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(npoints);
  if (it == cache.end()) it = cache.emplace(npoints, build_composite(npoints)).first;
  return it->second;
}

LogBinomial log_binomial(double alpha, long k) {
  if (k < 0) throw IndexError("log_binomial: k must be nonnegative");
  if (k == 0) return {0.0, +1};
  const bool integral = std::floor(alpha) == alpha;
  if (integral && alpha >= 0.0 && alpha < static_cast<double>(k))
    return {-std::numeric_limits<double>::infinity(), 0};
  if (alpha > static_cast<double>(k) - 1.0) {
    // all factors of the rising product are positive
    return {std::lgamma(alpha + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                std::lgamma(alpha - k + 1.0),
            +1};
  }
  if (alpha < 0.0) {
    // C(alpha,k) = (-1)^k C(k-alpha-1, k), with k-alpha-1 > k-1
    const double beta = static_cast<double>(k) - alpha - 1.0;
    const double lb = std::lgamma(beta + 1.0) -
                      std::lgamma(static_cast<double>(k) + 1.0) -
                      std::lgamma(beta - k + 1.0);
    return {lb, (k % 2 == 0) ? +1 : -1};
  }
  // 0 <= alpha <= k-1, non-integer: direct signed product
  double log_abs = -std::lgamma(static_cast<double>(k) + 1.0);
  int sign = +1;
  for (long j = 0; j < k; ++j) {
    const double factor = alpha - static_cast<double>(j);
    log_abs += std::log(std::abs(factor));
    if (factor < 0.0) sign = -sign;
  }
  return {log_abs, sign};
}

double default_step(int order, double x) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::pow(eps, 1.0 / (order + 2)) * std::max(1.0, std::abs(x));
}

}  // namespace baskakov::num
