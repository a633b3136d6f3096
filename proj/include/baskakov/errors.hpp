#pragma once

#include <stdexcept>
#include <string>

namespace baskakov {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the family's domain interval I_c.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// n <= 0, or n <= c when c >= 0.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// c < 0 but n/(-c) is not within tolerance of a positive integer.
class NonIntegerL : public Error {
 public:
  using Error::Error;
};

/// Certified truncation would need more terms than the policy allows.
/// Carries the index reached and the best tail bound achieved there.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, long k, double achieved_bound)
      : Error(what), k(k), achieved_bound(achieved_bound) {}
  long k;
  double achieved_bound;
};

/// Evaluation point is a root of the ODE's leading coefficient.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this parameter range.
class UnsupportedParams : public Error {
 public:
  using Error::Error;
};

/// Exact-arithmetic operation above its configured size cap.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// The exact linear system admitted no solution; indicates a bug, not
/// a mathematical failure.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace baskakov
