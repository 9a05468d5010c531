#pragma once

// Limits of slowly convergent sequences of partial sums.

#include "borwein/real.hpp"

#include <span>
#include <vector>

namespace borwein::accel {

struct Estimate {
  Real value;
  Real err;
};

/// Levin u-transform of order k built from s[n0..n0+k] (terms a_n = s_n - s_{n-1}).
Real levin_u(std::span<const Real> partial, std::size_t n0, int k);

/// Levin u at the end of the sequence; err compares orders k and k-1.
Estimate levin_u_tail(std::span<const Real> partial, int k);

/// Remainder terms x^-(exponent + j), j = 0, 1, ..., each times log(x)^p for p <= log_power.
struct Family {
  Rational exponent;
  int log_power = 0;
};

/// Interpolating fit S(x) = S + sum c_i phi_i(x), x = D + 1,
/// through nb + 1 points spread geometrically over [dmax/4, dmax].
/// The basis phi_i is the first nb functions of the merged families
/// ordered by decay (slowest first, higher log powers first).
Real richardson_fit(std::span<const Real> partial, std::span<const Family> families, int nb, std::size_t dmax);

/// Fit at (nb, dmax); err = max(|v - v(nb-2)|, |v - v(dmax*3/4)|).
Estimate richardson(std::span<const Real> partial, std::span<const Family> families, int nb);

/// Solves M x = rhs in place by Gaussian elimination with partial pivoting.
std::vector<Real> solve_dense(std::vector<std::vector<Real>> m, std::vector<Real> rhs);

}  // namespace borwein::accel
