#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "baskakov/errors.hpp"
#include "baskakov/verification.hpp"

namespace baskakov::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt factorial(long n);

/// Dense polynomial with exact rational coefficients, ascending degree.
class RationalPoly {
 public:
  RationalPoly() = default;  // zero polynomial
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly monomial(long degree, Rational coeff = Rational(1));

  long degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(long i) const;  // 0 beyond the stored range
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  RationalPoly derivative() const;
  /// Taylor shift: returns q with q(u) = p(u + a).
  RationalPoly shifted(const Rational& a) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& scalar);
  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) {
    return lhs += rhs;
  }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) {
    return lhs -= rhs;
  }
  friend RationalPoly operator*(const RationalPoly& lhs,
                                const RationalPoly& rhs);
  friend RationalPoly operator*(RationalPoly lhs, const Rational& scalar) {
    return lhs *= scalar;
  }
  friend bool operator==(const RationalPoly& lhs,
                         const RationalPoly& rhs) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// S_{n,-1} as an exact polynomial: sum_k (C(n,k) x^k (1-x)^(n-k))^2.
RationalPoly s_poly(long n);

/// Coefficients of S_{n,-1} recentered at 1/2:
///   S(x) = sum_k a_k (x - 1/2)^(2k),  a_k = 4^(k-n) C(2n,n) C(n,k)^2 / C(2n,2k).
/// Construction cross-checks the closed form against the Taylor shift of
/// s_poly and throws InconsistentSystem on any mismatch.
struct CentralForm {
  long n = 0;
  std::vector<Rational> a;  // k = 0..n
};
CentralForm central_form(long n);

/// S^(2j)(1/2) = (2j)! a_j, by the closed form, cross-checked.
Rational central_derivative(long n, long j);

/// f_n(t) = sum_j C(n-1,j) (C(n,j+1) t^(2j+1) - C(n,j) t^(2j)).
RationalPoly f_poly(long n);

/// Exact identity  2n f_n(t) = (t+1)^(2n-1) S'_{n,-1}(t/(t+1)).
bool f_slope_identity(long n);

/// Expands f_n(1+u) and asserts every coefficient >= 0 (hence all
/// derivatives of f_n are nonnegative on t >= 1 by Taylor expansion).
verify::VerificationRecord shift_expansion_nonneg(long n);

/// f_n in the basis (t-1)^(2k-1) (t+1)^(2n-2k), k = 1..n.  The basis
/// lowest degrees form a staircase, so the system is triangular in the
/// odd coefficients; the even coefficients are then verified to match.
struct CnkDecomposition {
  long n = 0;
  std::vector<Rational> c;  // k = 1..n at index k-1, all > 0
};
CnkDecomposition cnk_solve(long n);

/// (f_n^(i)(1) by exact differentiation,
///  i! sum_{j=floor(i/2)}^{n-1} C(n-1,j)(C(n,j+1)C(2j+1,i) - C(n,j)C(2j,i))).
/// The two components agree and are nonnegative.
std::pair<Rational, Rational> derivative_at_one(long n, long i);

/// Node values of the saw function w_n at j/(2n), j = 0..2n: zero at odd
/// j and C(n,k)^2 / C(2n,2k) at j = 2k.
std::vector<Rational> saw_nodes(long n);

/// Classical Bernstein operator image of the node values:
///   sum_j nodes[j] C(m,j) x^j (1-x)^(m-j), expanded exactly.
RationalPoly bernstein_apply(long m, const std::vector<Rational>& nodes);

/// A y'' + B y' + C y for the defining ODE at c = -1, order n, applied
/// to an arbitrary polynomial y; identically zero when y = s_poly(n).
RationalPoly s_ode_residual_poly(long n, const RationalPoly& y);

double to_double(const Rational& r);

}  // namespace baskakov::exact
