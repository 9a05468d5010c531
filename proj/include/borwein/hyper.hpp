#pragma once

// Generalized hypergeometric pFq and Kampe de Feriet double series
//
//   F[a; b; c | x, y] = sum_{m,n} (a)_{m+n} (b)_m (c)_n / ((a')_{m+n} (b')_m (c')_n)
//                        x^m y^n / (m! n!)
//
// with parameter lists kept as exact rationals.

#include "borwein/report.hpp"
#include "borwein/result.hpp"

#include <memory>
#include <string>
#include <vector>

namespace borwein::hyper {

struct PFQParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

struct KdFParams {
  std::vector<Rational> a, ap;  // joint
  std::vector<Rational> b, bp;  // first variable
  std::vector<Rational> c, cp;  // second variable
};

struct ConvergenceMargins {
  Rational m1, m2, m3;
  bool boundary_ok = false;
};

Rational pochhammer(const Rational& a, int n);
Real pochhammer(const Real& a, int n);

/// One parameter set prepared for repeated evaluation (quadrature nodes).
/// Regimes: direct summation; for 2F1 near 1 the connection formulas in 1-x
/// (logarithmic when c-a-b is an integer); for larger p near 1 the Euler
/// integral over one (upper, lower) pair; at x = 1 the Gauss sum or
/// the same reduction.
class Pfq {
 public:
  Pfq(const PFQParams& params, const Precision& prec);

  /// Absolute error <= tol * max(1, |value|).
  SeriesResult operator()(const Real& x, const Real& one_minus_x, const Real& tol) const;
  SeriesResult operator()(const Real& x, const Real& one_minus_x) const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Argument with its complement 1 - x supplied separately, for points
/// that come from a quadrature node close to 1.
SeriesResult pfq(const PFQParams& params, const Real& x, const Real& one_minus_x, const Precision& prec);
SeriesResult pfq(const PFQParams& params, const Real& x, const Precision& prec);

/// Left-hand sides of the three absolute-convergence conditions at (1,1).
ConvergenceMargins kdf_margins(const KdFParams& p);

/// A = A', B+1 upper over B lower, C+1 upper over C lower.
bool boundary_shape_supported(const KdFParams& p);

/// Parameters of the single series left at y = 0.
PFQParams x_slice(const KdFParams& p);

/// The same function with the two variables exchanged.
KdFParams swapped(const KdFParams& p);

/// Anti-diagonal summation. Interior points stop on a tail bound; points with
/// |x| = 1 or |y| = 1 are accelerated and need kdf_margins(p).boundary_ok.
SeriesResult kdf_series(const KdFParams& p, const Real& x, const Real& y, const Precision& prec);

/// Euler integral over t in (0,1); needs A = A' = 1 and a' > a > 0.
SeriesResult kdf_integral(const KdFParams& p, const Real& x, const Real& y, const Precision& prec);

/// B(a1, a1' - a1) pFq(z) against the integral of the reduced function over (0,1).
IdentityReport check_hginterep(const PFQParams& params, const Real& z, const Precision& prec, const Real& tol);

/// Parameter blocks of the three L-value formulas, all evaluated at (1,1):
/// "K1", "K2", "K3a", "K3b", "K3c", "K3d".
KdFParams theorem_block(const std::string& name);
const std::vector<std::string>& theorem_block_names();

/// "4/3" or "2" or "-1/2".
Rational parse_rational(const std::string& text);
/// Comma-separated rationals; empty text gives an empty list.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace borwein::hyper
