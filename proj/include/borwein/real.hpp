#pragma once

// Working-precision arithmetic shared by the numeric modules.
//
// Every numeric entry point takes a Precision and installs its digit count as
// the MPFR default for the duration of the call (ScopedDigits). Values built
// inside the call inherit that precision; values handed in from outside are
// re-rounded with at_precision().

#include <boost/multiprecision/mpfr.hpp>

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace borwein {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = mpq_class;

/// Input outside the mathematical domain of an evaluator.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested accuracy cannot be reached (working precision, level caps,
/// unstable acceleration).
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed request (unknown name, invalid flag combination).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Precision {
  int working_digits = 40;
  Real target_tol;

  /// Default: 40 digits, target 1e-30.
  Precision();
  /// Target defaults to 10^-(digits - 10).
  explicit Precision(int digits);
  /// Throws DomainError unless digits >= 15 and 10 guard digits remain.
  Precision(int digits, const Real& tol);

  /// Same digits, looser or equal target (never tighter than the guard rule).
  Precision with_tol(const Real& tol) const;
};

/// RAII: sets the default MPFR precision, restores the previous one on exit.
class ScopedDigits {
 public:
  explicit ScopedDigits(int digits10);
  explicit ScopedDigits(const Precision& p) : ScopedDigits(p.working_digits) {}
  ~ScopedDigits();
  ScopedDigits(const ScopedDigits&) = delete;
  ScopedDigits& operator=(const ScopedDigits&) = delete;

 private:
  unsigned saved_;
};

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real at_precision(const Real& x, int digits10);
Real to_real(const Rational& q);
Real pow10(int e);

Real pi();
Real sqrt3();

Real log_gamma(const Real& x);  // log|Gamma(x)|
Real gamma(const Real& x);
Real recip_gamma(const Real& x);  // 1/Gamma, zero at the poles
Real digamma(const Real& x);

/// Gamma(ap) / (Gamma(a) Gamma(ap - a)) through log-gamma; needs ap > a > 0.
Real beta_normalizer(const Real& a, const Real& ap);

/// Scientific decimal string with `digits` significant digits.
std::string to_decimal(const Real& x, int digits);

bool is_nonpositive_integer(const Rational& q);
bool is_integer(const Rational& q);

}  // namespace borwein
