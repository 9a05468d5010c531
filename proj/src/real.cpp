#include "borwein/real.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace borwein {

namespace {

Real fresh(const Real& like) {
  Real r;
  r.precision(like.precision());
  return r;
}

}  // namespace

Precision::Precision() : Precision(40) {}

Precision::Precision(int digits) {
  ScopedDigits guard(digits > 0 ? digits : 40);
  *this = Precision(digits, pow10(-(digits - 10)));
}

Precision::Precision(int digits, const Real& tol) : working_digits(digits) {
  if (digits < 15) {
    throw DomainError("working precision must be at least 15 digits, got " +
                      std::to_string(digits));
  }
  if (!(tol > 0)) throw DomainError("target tolerance must be positive");
  // -log10(tol) + 10 <= digits
  const double tol_digits = -static_cast<double>(log10(tol));
  if (tol_digits + 10.0 > digits + 1e-9) {
    throw DomainError("target tolerance needs more than " + std::to_string(digits - 10) +
                      " digits; raise working precision");
  }
  target_tol = at_precision(tol, digits);
}

Precision Precision::with_tol(const Real& tol) const {
  ScopedDigits guard(working_digits);
  Real t = tol < target_tol ? target_tol : tol;
  return Precision(working_digits, t);
}

ScopedDigits::ScopedDigits(int digits10) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits10));
}

ScopedDigits::~ScopedDigits() { Real::default_precision(saved_); }

Real at_precision(const Real& x, int digits10) { return Real(x, static_cast<unsigned>(digits10)); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real pow10(int e) { return pow(Real(10), e); }

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real sqrt3() { return sqrt(Real(3)); }

Real log_gamma(const Real& x) {
  Real r = fresh(x);
  int sign = 0;
  mpfr_lgamma(r.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  return r;
}

Real gamma(const Real& x) {
  Real r = fresh(x);
  mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real recip_gamma(const Real& x) {
  if (x <= 0 && x == floor(x)) return Real(0);
  return 1 / gamma(x);
}

Real digamma(const Real& x) {
  Real r = fresh(x);
  mpfr_digamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real beta_normalizer(const Real& a, const Real& ap) {
  if (!(a > 0) || !(ap > a)) throw DomainError("beta normalizer needs ap > a > 0");
  return exp(log_gamma(ap) - log_gamma(a) - log_gamma(ap - a));
}

std::string to_decimal(const Real& x, int digits) {
  // scientific precision counts the digits after the point
  return x.str(static_cast<std::streamsize>(std::max(digits - 1, 0)), std::ios_base::scientific);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

}  // namespace borwein
