#include "borwein/thetanum.hpp"

#include "borwein/hyper.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace borwein::thetanum {

namespace {

// Lattice point counts by norm: a and b over Z^2, c over the shifted lattice
// (index M for exponent M + 1/3).
struct LatticeCounts {
  std::vector<long> a, b, c;
};

constexpr int kMaxNorm = 200000;

const LatticeCounts& lattice_counts(int order) {
  static std::mutex mu;
  static LatticeCounts counts;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(counts.a.size()) > order) return counts;
  const int n = std::max(order, 2 * static_cast<int>(counts.a.size()) + 64);
  LatticeCounts fresh;
  fresh.a.assign(static_cast<std::size_t>(n) + 1, 0);
  fresh.b = fresh.a;
  fresh.c = fresh.a;
  const int r = static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 1;
  for (int x = -r; x <= r; ++x) {
    for (int y = -r; y <= r; ++y) {
      const long m = 1L * x * x + 1L * x * y + 1L * y * y;
      if (m <= n) {
        ++fresh.a[m];
        // Re(omega^(x-y)) = 1 or -1/2; accumulate twice the weight.
        fresh.b[m] += ((x - y) % 3 == 0) ? 2 : -1;
      }
      const long mc = m + x + y;
      if (mc >= 0 && mc <= n) ++fresh.c[mc];
    }
  }
  for (auto& v : fresh.b) v /= 2;
  counts = std::move(fresh);
  return counts;
}

// Smallest K with 20 (K+2) q^(K+1) / (1-q)^2 <= tol/10; 20(M+1) bounds the
// number of lattice points of norm M (or M + 1/3).
int lattice_cutoff(double log_q, double log_tol) {
  const double q = std::exp(log_q);
  const double log_one_minus_q = std::log1p(-q);
  const double target = log_tol - std::log(10.0) - std::log(20.0) + 2.0 * log_one_minus_q;
  int k = 0;
  while (std::log(k + 2.0) + (k + 1.0) * log_q > target) {
    ++k;
    if (k > kMaxNorm) throw PrecisionError("lattice sum needs more than 200000 norms; q too close to 1");
  }
  return k;
}

double log10_of(const Real& x) { return static_cast<double>(log10(x)); }

void check_representable(const Real& value, const Precision& prec) {
  const Real rounding = abs(value) * pow10(-(prec.working_digits - 2));
  if (rounding > prec.target_tol)
    throw PrecisionError("theta value " + to_decimal(value, 6) + " too large for the requested absolute tolerance at " +
                         std::to_string(prec.working_digits) + " digits");
}

Real direct_lattice(Kind kind, const Real& u, const Precision& prec) {
  const Real two_pi_u = 2 * pi() * u;
  const Real q = exp(-two_pi_u);
  const double log_q = -static_cast<double>(two_pi_u);
  const double log_tol = log10_of(prec.target_tol) * std::log(10.0);
  if (kind == Kind::eta) {
    // q^(1/24) prod (1 - q^n); |prod_{n>K} - 1| <= 2 q^(K+1)/(1-q) once that is <= 1/2.
    Real prod = 1;
    Real qn = q;
    for (int n = 1;; ++n) {
      prod *= 1 - qn;
      const double lb = std::log(2.0) + (n + 1.0) * log_q - std::log1p(-std::exp(log_q));
      if (lb < log_tol - std::log(10.0)) break;
      if (n > kMaxNorm) throw PrecisionError("eta product did not converge");
      qn *= q;
    }
    return exp(-two_pi_u / 24) * prod;
  }
  const int k = lattice_cutoff(log_q, log_tol);
  const auto& counts = lattice_counts(k);
  const std::vector<long>& r = kind == Kind::a ? counts.a : kind == Kind::b ? counts.b : counts.c;
  Real acc = 0;
  for (int m = k; m >= 0; --m) acc = acc * q + r[m];
  if (kind == Kind::c) acc *= exp(-two_pi_u / 3);
  return acc;
}

Real theta_auto(Kind kind, const Real& u, const Precision& prec);

Real via_involution(Kind kind, const Real& u, const Precision& prec) {
  const Real root3u = sqrt3() * u;
  switch (kind) {
    case Kind::b: return theta_auto(Kind::c, 1 / (3 * u), prec) / root3u;
    case Kind::c: return theta_auto(Kind::b, 1 / (3 * u), prec) / root3u;
    case Kind::a: {
      const Real b = theta_auto(Kind::c, 1 / (3 * u), prec) / root3u;
      const Real c = theta_auto(Kind::b, 1 / (3 * u), prec) / root3u;
      return cbrt(b * b * b + c * c * c);
    }
    case Kind::eta: return theta_auto(Kind::eta, 1 / u, prec) / sqrt(u);
  }
  throw std::logic_error("unknown theta kind");
}

Real theta_auto(Kind kind, const Real& u, const Precision& prec) {
  const Real fixed = kind == Kind::eta ? Real(1) : switch_point();
  return u >= fixed ? direct_lattice(kind, u, prec) : via_involution(kind, u, prec);
}

Real checked_u(const Real& u) {
  if (!(u > 0)) throw DomainError("theta evaluation needs u > 0 (q in (0,1))");
  return u;
}

}  // namespace

Real switch_point() { return 1 / sqrt3(); }

Real u_of_q(const Real& q) {
  if (!(q > 0) || !(q < 1)) throw DomainError("q must lie in (0,1), got " + to_decimal(q, 10));
  return -log(q) / (2 * pi());
}

Real eval_theta_u(Kind kind, const Real& u_in, const Precision& prec, Regime regime) {
  ScopedDigits guard(prec);
  const Real u = checked_u(at_precision(u_in, prec.working_digits));
  Real v;
  switch (regime) {
    case Regime::automatic: v = theta_auto(kind, u, prec); break;
    case Regime::direct: v = direct_lattice(kind, u, prec); break;
    case Regime::involution: v = via_involution(kind, u, prec); break;
  }
  check_representable(v, prec);
  return v;
}

Real eval_theta(Kind kind, const Real& q, const Precision& prec, Regime regime) {
  ScopedDigits guard(prec);
  return eval_theta_u(kind, u_of_q(at_precision(q, prec.working_digits)), prec, regime);
}

ThetaPoint theta_point_u(const Real& u_in, const Precision& prec) {
  ScopedDigits guard(prec);
  ThetaPoint p;
  p.u = checked_u(at_precision(u_in, prec.working_digits));
  p.q = exp(-2 * pi() * p.u);
  p.b = theta_auto(Kind::b, p.u, prec);
  p.c = theta_auto(Kind::c, p.u, prec);
  const Real b3 = p.b * p.b * p.b;
  const Real c3 = p.c * p.c * p.c;
  p.a = p.u >= switch_point() ? direct_lattice(Kind::a, p.u, prec) : cbrt(b3 + c3);
  check_representable(p.a, prec);
  const Real a3 = p.a * p.a * p.a;
  p.alpha = c3 / a3;
  p.one_minus_alpha = b3 / a3;
  return p;
}

ThetaPoint theta_point(const Real& q, const Precision& prec) {
  ScopedDigits guard(prec);
  auto p = theta_point_u(u_of_q(at_precision(q, prec.working_digits)), prec);
  p.q = at_precision(q, prec.working_digits);
  return p;
}

Real alpha_of_q(const Real& q, const Precision& prec) { return theta_point(q, prec).alpha; }

Real f_integrand(const Real& u_in, const Precision& prec, Regime regime) {
  ScopedDigits guard(prec);
  const Real u = checked_u(at_precision(u_in, prec.working_digits));
  const bool direct = regime == Regime::direct || (regime == Regime::automatic && u >= switch_point());
  if (direct) {
    const Real b = regime == Regime::direct ? direct_lattice(Kind::b, u, prec) : theta_auto(Kind::b, u, prec);
    const Real c3 = regime == Regime::direct ? direct_lattice(Kind::c, 3 * u, prec) : theta_auto(Kind::c, 3 * u, prec);
    return b * b * c3;
  }
  const Real c = theta_auto(Kind::c, 1 / (3 * u), prec);
  const Real b = theta_auto(Kind::b, 1 / (9 * u), prec);
  return c * c * b / (9 * sqrt3() * u * u * u);
}

Real residual_hauptmodul(const Real& q, const Precision& prec) {
  ScopedDigits guard(prec);
  const auto p = theta_point(q, prec);
  if (!(p.one_minus_alpha > 0))
    throw DomainError("alpha(q) rounds to 1 at working precision; hauptmodul check refused");
  const hyper::PFQParams params{{Rational(1, 3), Rational(2, 3)}, {Rational(1)}};
  const auto f = hyper::pfq(params, p.alpha, p.one_minus_alpha, prec);
  return p.a - f.value;
}

DifferentialCheck differential_check(const Real& q_in, const Precision& prec, const Real& h0_in, int halvings) {
  ScopedDigits guard(prec);
  const Real q = at_precision(q_in, prec.working_digits);
  Real h = at_precision(h0_in, prec.working_digits);
  if (halvings < 2) throw DomainError("differential check needs at least two halvings");
  if (!(h > 0) || !(q - h > 0) || !(q + h < 1)) throw DomainError("differential check: q +- h0 must stay in (0,1)");
  const auto p = theta_point(q, prec);
  DifferentialCheck d;
  d.q = q;
  d.target = p.a * p.a * p.alpha * p.one_minus_alpha / q;
  std::vector<Real> quotient;
  for (int i = 0; i <= halvings; ++i, h /= 2) {
    const Real dq = (alpha_of_q(q + h, prec) - alpha_of_q(q - h, prec)) / (2 * h);
    quotient.push_back(dq);
    d.h.push_back(h);
    d.err.push_back(dq - d.target);
    if (i > 0) d.ratio.push_back(static_cast<double>(d.err[i - 1] / d.err[i]));
  }
  const Real extrap = (4 * quotient.back() - quotient[quotient.size() - 2]) / 3;
  d.extrapolated_residual = abs(extrap - d.target);
  return d;
}

}  // namespace borwein::thetanum
