#include "baskakov/exact.hpp"

#include <algorithm>

namespace baskakov::exact {

namespace {

constexpr long kMaxOrder = 500;

void check_order(long n) {
  if (n < 1) throw DomainError("exact: n must be a positive integer");
  if (n > kMaxOrder) throw SizeExceeded("exact: n exceeds the size cap");
}

BigInt pow_bigint(BigInt base, long e) {
  BigInt acc = 1;
  while (e-- > 0) acc *= base;
  return acc;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (long j = 1; j <= k; ++j) {
    acc *= n - k + j;
    acc /= j;  // exact: acc is C(n-k+j, j) * j before the division
  }
  return acc;
}

BigInt factorial(long n) {
  BigInt acc = 1;
  for (long j = 2; j <= n; ++j) acc *= j;
  return acc;
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

RationalPoly RationalPoly::monomial(long degree, Rational coeff) {
  if (degree < 0) throw IndexError("monomial: negative degree");
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return RationalPoly(std::move(c));
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long RationalPoly::degree() const {
  return static_cast<long>(coeffs_.size()) - 1;
}

const Rational& RationalPoly::coeff(long i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return zero;
  return coeffs_[i];
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::shifted(const Rational& a) const {
  // repeated synthetic division computes the Taylor coefficients at -a
  std::vector<Rational> c = coeffs_;
  const long d = static_cast<long>(c.size()) - 1;
  for (long i = 0; i < d; ++i)
    for (long j = d - 1; j >= i; --j) c[j] += a * c[j + 1];
  return RationalPoly(std::move(c));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return RationalPoly(std::move(c));
}

RationalPoly s_poly(long n) {
  check_order(n);
  std::vector<Rational> c(2 * n + 1);
  for (long k = 0; k <= n; ++k) {
    const BigInt w = binomial(n, k) * binomial(n, k);
    const long m = 2 * (n - k);
    for (long j = 0; j <= m; ++j) {
      const BigInt term = w * binomial(m, j);
      if (j % 2 == 0)
        c[2 * k + j] += Rational(term);
      else
        c[2 * k + j] -= Rational(term);
    }
  }
  return RationalPoly(std::move(c));
}

CentralForm central_form(long n) {
  check_order(n);
  CentralForm form;
  form.n = n;
  form.a.resize(n + 1);
  for (long k = 0; k <= n; ++k) {
    const BigInt num = binomial(2 * n, n) * binomial(n, k) * binomial(n, k) *
                       pow_bigint(4, k);
    const BigInt den = pow_bigint(4, n) * binomial(2 * n, 2 * k);
    form.a[k] = Rational(num, den);
  }
  // self-check against the Taylor shift of the explicit polynomial
  const RationalPoly recentered = s_poly(n).shifted(Rational(1, 2));
  for (long i = 0; i <= 2 * n; ++i) {
    const Rational expected = (i % 2 == 0) ? form.a[i / 2] : Rational(0);
    if (recentered.coeff(i) != expected)
      throw InconsistentSystem("central_form: closed form disagrees with "
                               "the recentered polynomial");
  }
  return form;
}

Rational central_derivative(long n, long j) {
  check_order(n);
  if (j < 0 || j > n)
    throw IndexError("central_derivative: need 0 <= j <= n");
  const BigInt num = binomial(2 * n, n) * binomial(n, j) * binomial(n, j) *
                     pow_bigint(4, j);
  const BigInt den = pow_bigint(4, n) * binomial(2 * n, 2 * j);
  const Rational closed = Rational(factorial(2 * j)) * Rational(num, den);
  const CentralForm form = central_form(n);
  if (closed != Rational(factorial(2 * j)) * form.a[j])
    throw InconsistentSystem("central_derivative: closed form disagrees");
  return closed;
}

RationalPoly f_poly(long n) {
  check_order(n);
  std::vector<Rational> c(2 * n);
  for (long j = 0; j <= n - 1; ++j) {
    const BigInt row = binomial(n - 1, j);
    c[2 * j + 1] += Rational(row * binomial(n, j + 1));
    c[2 * j] -= Rational(row * binomial(n, j));
  }
  return RationalPoly(std::move(c));
}

bool f_slope_identity(long n) {
  check_order(n);
  const RationalPoly lhs = f_poly(n) * Rational(2 * n);
  const RationalPoly sprime = s_poly(n).derivative();
  // (t+1)^(2n-1) S'(t/(t+1)) = sum_i s'_i t^i (t+1)^(2n-1-i)
  RationalPoly rhs;
  for (long i = 0; i <= sprime.degree(); ++i) {
    const long m = 2 * n - 1 - i;
    std::vector<Rational> term(i + m + 1);
    for (long j = 0; j <= m; ++j)
      term[i + j] = sprime.coeff(i) * Rational(binomial(m, j));
    rhs += RationalPoly(std::move(term));
  }
  return lhs == rhs;
}

verify::VerificationRecord shift_expansion_nonneg(long n) {
  check_order(n);
  const RationalPoly expansion = f_poly(n).shifted(Rational(1));
  verify::VerificationRecord rec{"exact", "shift-expansion-nonneg",
                                 verify::Status::pass, 0.0, ""};
  Rational worst(0);
  long worst_i = -1;
  for (long i = 0; i <= 2 * n - 1; ++i) {
    const Rational& c = expansion.coeff(i);
    if (worst_i < 0 || c < worst) {
      worst = c;
      worst_i = i;
    }
  }
  rec.worst_margin = to_double(worst);
  rec.location = "n=" + std::to_string(n) + " u^" + std::to_string(worst_i);
  if (worst < 0) rec.status = verify::Status::fail;
  return rec;
}

CnkDecomposition cnk_solve(long n) {
  check_order(n);
  const RationalPoly target = f_poly(n).shifted(Rational(1));

  // basis in u = t-1: b_k(u) = u^(2k-1) (2+u)^(2n-2k)
  std::vector<RationalPoly> basis;
  basis.reserve(n);
  for (long k = 1; k <= n; ++k) {
    const long m = 2 * n - 2 * k;
    std::vector<Rational> c(2 * k - 1 + m + 1);
    for (long j = 0; j <= m; ++j)
      c[2 * k - 1 + j] = Rational(binomial(m, j) * pow_bigint(2, m - j));
    basis.emplace_back(std::move(c));
  }

  // forward substitution down the staircase of odd-degree coefficients
  CnkDecomposition dec;
  dec.n = n;
  dec.c.resize(n);
  for (long k = 1; k <= n; ++k) {
    Rational acc = target.coeff(2 * k - 1);
    for (long j = 1; j < k; ++j)
      acc -= dec.c[j - 1] * basis[j - 1].coeff(2 * k - 1);
    const Rational& diag = basis[k - 1].coeff(2 * k - 1);
    if (diag == 0) throw InconsistentSystem("cnk_solve: zero pivot");
    dec.c[k - 1] = acc / diag;
  }

  // the even coefficients are not used by the solve; verifying the full
  // reconstruction settles consistency of the overdetermined system
  RationalPoly recon;
  for (long k = 1; k <= n; ++k) {
    RationalPoly term = basis[k - 1];
    term *= dec.c[k - 1];
    recon += term;
  }
  if (!(recon == target))
    throw InconsistentSystem("cnk_solve: reconstruction mismatch");
  return dec;
}

std::pair<Rational, Rational> derivative_at_one(long n, long i) {
  check_order(n);
  if (i < 0 || i > 2 * n - 1)
    throw IndexError("derivative_at_one: need 0 <= i <= 2n-1");
  const Rational by_poly =
      Rational(factorial(i)) * f_poly(n).shifted(Rational(1)).coeff(i);
  BigInt sum = 0;
  for (long j = i / 2; j <= n - 1; ++j) {
    sum += binomial(n - 1, j) * (binomial(n, j + 1) * binomial(2 * j + 1, i) -
                                 binomial(n, j) * binomial(2 * j, i));
  }
  const Rational by_formula = Rational(factorial(i) * sum);
  return {by_poly, by_formula};
}

std::vector<Rational> saw_nodes(long n) {
  check_order(n);
  std::vector<Rational> nodes(2 * n + 1);
  for (long k = 0; k <= n; ++k)
    nodes[2 * k] =
        Rational(binomial(n, k) * binomial(n, k), binomial(2 * n, 2 * k));
  return nodes;
}

RationalPoly bernstein_apply(long m, const std::vector<Rational>& nodes) {
  if (m < 1 || static_cast<long>(nodes.size()) != m + 1)
    throw IndexError("bernstein_apply: need m+1 node values");
  std::vector<Rational> c(m + 1);
  for (long j = 0; j <= m; ++j) {
    if (nodes[j] == 0) continue;
    const Rational w = nodes[j] * Rational(binomial(m, j));
    for (long i = 0; i <= m - j; ++i) {
      const Rational term = w * Rational(binomial(m - j, i));
      if (i % 2 == 0)
        c[j + i] += term;
      else
        c[j + i] -= term;
    }
  }
  return RationalPoly(std::move(c));
}

RationalPoly s_ode_residual_poly(long n, const RationalPoly& y) {
  check_order(n);
  const RationalPoly a(
      std::vector<Rational>{Rational(0), Rational(1), Rational(-3), Rational(2)});
  const RationalPoly b(std::vector<Rational>{
      Rational(1), Rational(4 * (n - 1)), Rational(-4 * (n - 1))});
  const RationalPoly c(std::vector<Rational>{Rational(2 * n), Rational(-4 * n)});
  return a * y.derivative().derivative() + b * y.derivative() + c * y;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace baskakov::exact
