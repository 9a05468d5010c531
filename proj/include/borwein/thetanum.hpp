#pragma once

// Real evaluation of the cubic theta functions a, b, c and of eta on the
// segment q = exp(-2 pi u), u > 0.
//
// For u >= 1/sqrt(3) the lattice sums are summed directly. Below that point
// b and c are exchanged through u <-> 1/(3u):
//   b(e^{-2 pi u}) = c(e^{-2 pi/(3u)}) / (sqrt(3) u),
//   c(e^{-2 pi u}) = b(e^{-2 pi/(3u)}) / (sqrt(3) u),
// and a = (b^3 + c^3)^(1/3).

#include "borwein/real.hpp"

#include <vector>

namespace borwein::thetanum {

enum class Kind { a, b, c, eta };

enum class Regime {
  automatic,
  direct,      // lattice / product series at the given point, any u
  involution,  // always through the transformed point
};

/// 1/sqrt(3): fixed point of u <-> 1/(3u).
Real switch_point();

/// u with q = exp(-2 pi u); q must lie in (0,1).
Real u_of_q(const Real& q);

Real eval_theta_u(Kind kind, const Real& u, const Precision& prec, Regime regime = Regime::automatic);
Real eval_theta(Kind kind, const Real& q, const Precision& prec, Regime regime = Regime::automatic);

struct ThetaPoint {
  Real q;
  Real u;
  Real a, b, c;
  Real alpha;            // c^3 / a^3
  Real one_minus_alpha;  // b^3 / a^3, kept separately for accuracy near q -> 1
};

ThetaPoint theta_point_u(const Real& u, const Precision& prec);
ThetaPoint theta_point(const Real& q, const Precision& prec);

Real alpha_of_q(const Real& q, const Precision& prec);

/// b(e^{-2 pi u})^2 c(e^{-6 pi u}). Below the switch point this is
/// c(e^{-2pi/(3u)})^2 b(e^{-2pi/(9u)}) / (9 sqrt(3) u^3).
Real f_integrand(const Real& u, const Precision& prec, Regime regime = Regime::automatic);

/// a(q) - 2F1(1/3, 2/3; 1; alpha(q)).
Real residual_hauptmodul(const Real& q, const Precision& prec);

/// Central differences of alpha against d alpha/dq = a^2 alpha (1 - alpha) / q.
struct DifferentialCheck {
  Real q;
  Real target;                // a^2 alpha (1 - alpha) / q
  std::vector<Real> h;        // h0, h0/2, ...
  std::vector<Real> err;      // difference quotient minus target at each h
  std::vector<double> ratio;  // err[i-1] / err[i], about 4 for O(h^2)
  Real extrapolated_residual; // |(4 D(h_min) - D(2 h_min)) / 3 - target|
};

/// needs 0 < q - h0 and q + h0 < 1, halvings >= 2.
DifferentialCheck differential_check(const Real& q, const Precision& prec, const Real& h0, int halvings);

}  // namespace borwein::thetanum
