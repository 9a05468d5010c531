#include "borwein/quad.hpp"

#include <cmath>
#include <vector>

namespace borwein::quad {

namespace {

struct Node {
  Real t, one_minus_t, weight;
};

Node make_node(const Real& s) {
  const Real w = exp(-pi() * sinh(s));
  const Real one_plus_w = 1 + w;
  Node n;
  n.t = 1 / one_plus_w;
  n.one_minus_t = w / one_plus_w;
  n.weight = pi() * cosh(s) * w / (one_plus_w * one_plus_w);
  return n;
}

Real contribution(const Integrand& f, const Real& s) {
  const Node n = make_node(s);
  if (n.weight == 0) return Real(0);
  const Real v = f(n.t, n.one_minus_t);
  if (!boost::multiprecision::isfinite(v))
    throw PrecisionError("integrand not finite at t = " + to_decimal(n.t, 20));
  return n.weight * v;
}

}  // namespace

SeriesResult quad_de(const Integrand& f, const Real& tol, const Precision& prec, int max_level) {
  ScopedDigits guard(prec);
  // w < 10^(-3 digits) at |s| = s_max, far below any integrable singularity.
  const double s_max = std::asinh(3.0 * prec.working_digits * std::log(10.0) / M_PI);
  const double h0 = 0.5;
  const int k_max = static_cast<int>(std::ceil(s_max / h0));

  // Level 0 over the full range; outer nodes whose contributions are
  // negligible are dropped from the refinements.
  std::vector<Real> c0(2 * static_cast<std::size_t>(k_max) + 1);
  Real sum = 0;
  long evals = 0;
  for (int k = -k_max; k <= k_max; ++k) {
    c0[static_cast<std::size_t>(k + k_max)] = contribution(f, Real(k * h0));
    sum += c0[static_cast<std::size_t>(k + k_max)];
    ++evals;
  }
  const Real negligible = tol * pow10(-4) / h0;
  int lo = -k_max, hi = k_max;
  while (lo < 0 && abs(c0[static_cast<std::size_t>(lo + k_max)]) < negligible) ++lo;
  while (hi > 0 && abs(c0[static_cast<std::size_t>(hi + k_max)]) < negligible) --hi;
  const double s_lo = std::max(-s_max, (lo - 1) * h0);
  const double s_hi = std::min(s_max, (hi + 1) * h0);

  Real h = h0;
  Real prev = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    const double hd = h0 / std::pow(2.0, level);
    const long j_lo = static_cast<long>(std::ceil(s_lo / hd));
    const long j_hi = static_cast<long>(std::floor(s_hi / hd));
    for (long j = j_lo; j <= j_hi; ++j) {
      if (j % 2 == 0) continue;
      sum += contribution(f, Real(j) * h);
      ++evals;
    }
    const Real cur = h * sum;
    const Real diff = abs(cur - prev);
    if (level >= 2 && diff <= tol) {
      SeriesResult r;
      r.value = cur;
      r.err_estimate = diff;
      r.terms_used = evals;
      r.method = Method::integral;
      return r;
    }
    prev = cur;
  }
  throw PrecisionError("tanh-sinh quadrature did not reach tolerance " + to_decimal(tol, 3) + " after " +
                       std::to_string(max_level) + " levels");
}

}  // namespace borwein::quad
