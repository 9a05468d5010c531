#include "borwein/lvalue.hpp"

#include "borwein/accel.hpp"
#include "borwein/hyper.hpp"
#include "borwein/qexp.hpp"
#include "borwein/quad.hpp"
#include "borwein/thetanum.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>

namespace borwein::lvalue {

namespace th = borwein::thetanum;

const char* to_string(LMethod m) {
  switch (m) {
    case LMethod::mellin: return "mellin";
    case LMethod::dirichlet: return "dirichlet";
    case LMethod::alpha_integral: return "alpha_integral";
    case LMethod::rz_intermediate: return "rz_intermediate";
  }
  return "?";
}

LMethod parse_method(const std::string& name) {
  if (name == "mellin") return LMethod::mellin;
  if (name == "dirichlet") return LMethod::dirichlet;
  if (name == "alpha_integral") return LMethod::alpha_integral;
  if (name == "rz_intermediate") return LMethod::rz_intermediate;
  throw UsageError("unknown L-value method '" + name + "'");
}

const char* to_string(Route r) { return r == Route::series ? "series" : "integral"; }

Route parse_route(const std::string& name) {
  if (name == "series") return Route::series;
  if (name == "integral") return Route::integral;
  throw UsageError("unknown route '" + name + "'");
}

namespace {

void check_n(int n) {
  if (n < 1 || n > 3) throw UsageError("L-values are available for n = 1, 2, 3 only");
}

Real factorial(int n) {
  Real r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// int_0^inf g(u) du: [0, us] through u = us t, [us, inf) through u = us / t.
SeriesResult integrate_halfline(const std::function<Real(const Real&)>& g, const Real& us, const Real& tol,
                                const Precision& prec) {
  const auto inner = quad::quad_de([&](const Real& t, const Real&) { return us * g(us * t); }, tol / 2, prec);
  const auto outer = quad::quad_de(
      [&](const Real& t, const Real&) {
        if (t == 0) return Real(0);
        return us * g(us / t) / (t * t);
      },
      tol / 2, prec);
  return {inner.value + outer.value, inner.err_estimate + outer.err_estimate, inner.terms_used + outer.terms_used,
          Method::integral};
}

// chi(N) sigma(N) / N at the given precision, cached per digit count.
const std::vector<Real>& e0_coefficients(std::size_t count, int digits) {
  static std::mutex mu;
  static std::map<int, std::vector<Real>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[digits];
  if (v.size() > count) return v;
  const std::size_t n = std::max(count + 1, 2 * v.size());
  std::vector<long> sigma(n, 0);
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t m = d; m < n; m += d) sigma[m] += static_cast<long>(d);
  ScopedDigits guard(digits);
  v.assign(n, Real(0));
  for (std::size_t k = 1; k < n; ++k) {
    const int chi = qexp::chi3(static_cast<long long>(k));
    if (chi != 0) v[k] = Real(chi * sigma[k]) / static_cast<long>(k);
  }
  return v;
}

// E0 at q = exp(-2 pi u).
SeriesResult e0_at_u(const Real& u, const Precision& prec) {
  const Real third_log = -2 * pi() * u / 3;  // log q^{1/3}
  const double lq3 = static_cast<double>(third_log);
  const double log_tol = std::log(static_cast<double>(prec.target_tol)) - std::log(10.0);
  // |chi sigma_{-1}(N)| <= 1 + log N; stop once (2 + log K) q^{K/3} / (1 - q^{1/3}) <= tol/10.
  const double denom = -std::log(-std::expm1(lq3));
  long k = 1;
  while (std::log(2.0 + std::log(static_cast<double>(k))) + k * lq3 + denom > log_tol) {
    ++k;
    if (k > 5000000) throw PrecisionError("E0 Lambert series needs too many terms; q too close to 1");
  }
  const auto& coef = e0_coefficients(static_cast<std::size_t>(k), prec.working_digits);
  const Real q3 = exp(third_log);
  const Real q = q3 * q3 * q3;
  Real p3 = 1, p1 = 1, s = 0;
  for (long n = 1; n <= k; ++n) {
    p3 *= q3;
    p1 *= q;
    if (coef[static_cast<std::size_t>(n)] != 0) s += coef[static_cast<std::size_t>(n)] * (p3 - p1);
  }
  const Real bound = exp(Real(std::log(2.0 + std::log(static_cast<double>(k))) + k * lq3 + denom));
  return {s, bound, k, Method::direct};
}

// The four hypergeometric pieces of E0 prepared once.
class E0Hyper {
 public:
  explicit E0Hyper(const Precision& prec)
      : f1_({{Rational(1, 3), 1}, {Rational(4, 3)}}, prec),
        f2_({{Rational(2, 3), 1}, {Rational(5, 3)}}, prec),
        g4_({{1, 1, Rational(4, 3)}, {2, 2}}, prec),
        g5_({{1, 1, Rational(5, 3)}, {2, 2}}, prec) {}

  SeriesResult operator()(const Real& alpha, const Real& oma, const Real& tol) const {
    if (alpha == 0) return {Real(0), Real(0), 0, Method::direct};
    const Real la = log(alpha);
    const Real a13 = exp(la / 3), a23 = exp(2 * la / 3);
    const auto v1 = f1_(alpha, oma, tol);
    const auto v2 = f2_(alpha, oma, tol);
    const auto v4 = g4_(alpha, oma, tol);
    const auto v5 = g5_(alpha, oma, tol);
    SeriesResult r;
    r.value = a13 / 3 * v1.value - a23 / 6 * v2.value + alpha / 27 * v4.value - 2 * alpha / 27 * v5.value;
    r.err_estimate = a13 / 3 * v1.err_estimate + a23 / 6 * v2.err_estimate + alpha / 27 * v4.err_estimate +
                     2 * alpha / 27 * v5.err_estimate;
    r.terms_used = v1.terms_used + v2.terms_used + v4.terms_used + v5.terms_used;
    r.method = Method::direct;
    return r;
  }

 private:
  hyper::Pfq f1_, f2_, g4_, g5_;
};

// log(1 - t) from whichever of t, 1-t carries full relative accuracy.
Real log_one_minus(const Real& t, const Real& omt) { return t < Real(1) / 2 ? log1p(-t) : log(omt); }

}  // namespace

SeriesResult l_mellin(int n, const Precision& prec, double split_scale) {
  check_n(n);
  ScopedDigits guard(prec);
  const Real scale = pow(2 * pi(), n) / (3 * factorial(n - 1));
  const Real us = th::switch_point() * Real(split_scale);
  const auto g = [&](const Real& u) -> Real {
    if (u == 0) return Real(0);
    return th::f_integrand(u, prec) * pow(u, n - 1);
  };
  auto r = integrate_halfline(g, us, prec.target_tol / scale, prec);
  r.value *= scale;
  r.err_estimate *= scale;
  return r;
}

DirichletSum dirichlet_sum(long N) {
  if (N < 1000) throw DomainError("Dirichlet summation needs N >= 1000");
  const auto a = qexp::f_coefficients_int(static_cast<int>(N));
  ScopedDigits guard(30);
  // Least-squares fits of S(M) = S + g_{M mod 3} / M over three windows of
  // partial sums; the 1/M tail of the series is periodic in M mod 3.
  struct Window {
    long lo, hi;
    Real n = 0, s = 0;
    Real x[3] = {0, 0, 0}, xx[3] = {0, 0, 0}, xs[3] = {0, 0, 0};
    void add(long m, const Real& sum) {
      if (m < lo || m > hi) return;
      const int r = static_cast<int>(m % 3);
      const Real inv = Real(1) / m;
      n += 1;
      s += sum;
      x[r] += inv;
      xx[r] += inv * inv;
      xs[r] += inv * sum;
    }
    Real limit() const {
      std::vector<std::vector<Real>> m(4, std::vector<Real>(4, Real(0)));
      std::vector<Real> rhs{s, xs[0], xs[1], xs[2]};
      m[0][0] = n;
      for (int r = 0; r < 3; ++r) {
        m[0][r + 1] = m[r + 1][0] = x[r];
        m[r + 1][r + 1] = xx[r];
      }
      return accel::solve_dense(m, rhs)[0];
    }
  };
  Window full{N / 2, N}, late{3 * N / 4, N}, early{N / 4, N / 2};
  Real s = 0;
  for (long n = 1; n <= N; ++n) {
    if (a[static_cast<std::size_t>(n)] != 0) {
      const Real nr(n);
      s += Real(a[static_cast<std::size_t>(n)]) / (nr * nr * nr);
    }
    if (n >= N / 4) {
      full.add(n, s);
      late.add(n, s);
      early.add(n, s);
    }
  }
  const Real limit = full.limit();
  DirichletSum d;
  d.partial_sum = s;
  d.tail = limit - s;
  d.result.value = limit;
  d.result.err_estimate = max(abs(limit - late.limit()), abs(limit - early.limit()));
  d.result.terms_used = N;
  d.result.method = Method::accelerated;
  return d;
}

SeriesResult l_dirichlet(long N) { return dirichlet_sum(N).result; }

SeriesResult l_alpha_integral(int n, const Precision& prec) {
  check_n(n);
  ScopedDigits guard(prec);
  const hyper::Pfq hauptmodul({{Rational(1, 3), Rational(2, 3)}, {1}}, prec);
  const Real tol = prec.target_tol;
  Real scale;
  quad::Integrand integrand;
  std::optional<E0Hyper> e0;
  if (n == 1) {
    scale = Real(1) / 9;
    integrand = [&](const Real& t, const Real& omt) {
      const Real g = expm1(-log_one_minus(t, omt) / 3);
      return g * hauptmodul(t, omt, tol / 10).value / t;
    };
  } else if (n == 2) {
    scale = 2 * pi() / (27 * sqrt3());
    integrand = [&](const Real& t, const Real& omt) {
      const Real g = expm1(-log_one_minus(t, omt) / 3);
      return g * g * hauptmodul(t, omt, tol / 10).value / t;
    };
  } else {
    scale = 2 * pi() * pi() / 27;
    e0.emplace(prec);
    integrand = [&](const Real& t, const Real& omt) {
      return (*e0)(t, omt, tol / 10).value * hauptmodul(t, omt, tol / 10).value / t;
    };
  }
  auto r = quad::quad_de(integrand, tol / (2 * scale), prec);
  r.value *= scale;
  r.err_estimate = r.err_estimate * scale + tol / 2;
  return r;
}

SeriesResult l_rz_intermediate(int n, const Precision& prec) {
  check_n(n);
  ScopedDigits guard(prec);
  const Real tol = prec.target_tol;
  const Real two_pi = 2 * pi();
  Real scale;
  std::function<Real(const Real&)> g;
  // b decays like exp(-2 pi/(9u)) as u -> 0 while a grows like 1/u; the
  // integrand is dropped once b alone puts it below tol * 1e-10.
  const auto negligible = [&](const Real& b, const Real& u) { return b < tol * pow10(-10) * u * u; };
  if (n == 1 || n == 2) {
    scale = n == 1 ? two_pi / 9 : two_pi * two_pi / (27 * sqrt3());
    g = [&, n](const Real& u) -> Real {
      if (u == 0) return Real(0);
      const Real b = th::eval_theta_u(th::Kind::b, u, prec);
      if (negligible(b, u)) return Real(0);
      const Real amb = th::eval_theta_u(th::Kind::a, u, prec) - b;
      return n == 1 ? b * b * amb : b * amb * amb;
    };
  } else {
    scale = two_pi * 2 * pi() * pi() / 27;
    g = [&](const Real& u) -> Real {
      if (u == 0) return Real(0);
      const Real b = th::eval_theta_u(th::Kind::b, u, prec);
      if (negligible(b, u)) return Real(0);
      return b * b * b * e0_at_u(u, prec.with_tol(tol / 10)).value;
    };
  }
  auto r = integrate_halfline(g, th::switch_point(), tol / scale, prec);
  r.value *= scale;
  r.err_estimate *= scale;
  return r;
}

SeriesResult l_value(int n, LMethod method, const Precision& prec, long N) {
  check_n(n);
  switch (method) {
    case LMethod::mellin: return l_mellin(n, prec);
    case LMethod::dirichlet:
      if (n != 3) throw UsageError("the Dirichlet series is used only at n = 3");
      return l_dirichlet(N);
    case LMethod::alpha_integral: return l_alpha_integral(n, prec);
    case LMethod::rz_intermediate: return l_rz_intermediate(n, prec);
  }
  throw UsageError("unknown method");
}

SeriesResult rhs_theorem(int n, Route route, const Precision& prec) {
  check_n(n);
  ScopedDigits guard(prec);
  const Precision work = route == Route::series ? prec.with_tol(pow10(-kSeriesRouteDigits)) : prec;
  const auto block = [&](const char* name) {
    const auto p = hyper::theorem_block(name);
    return route == Route::series ? hyper::kdf_series(p, Real(1), Real(1), work)
                                  : hyper::kdf_integral(p, Real(1), Real(1), work);
  };
  std::vector<std::pair<Real, SeriesResult>> parts;
  if (n == 1) {
    parts.push_back({Real(1) / 27, block("K1")});
  } else if (n == 2) {
    const Real k = 4 * pi() / (81 * sqrt3());
    parts.push_back({k, block("K2")});
    parts.push_back({-k, block("K1")});
  } else {
    const Real k = 2 * pi() * pi() / 27;
    parts.push_back({k, block("K3a")});
    parts.push_back({-k / 4, block("K3b")});
    parts.push_back({k / 27, block("K3c")});
    parts.push_back({-2 * k / 27, block("K3d")});
  }
  SeriesResult r;
  r.value = 0;
  r.err_estimate = 0;
  r.method = route == Route::series ? Method::accelerated : Method::integral;
  for (const auto& [coef, v] : parts) {
    r.value += coef * v.value;
    r.err_estimate += abs(coef) * v.err_estimate;
    r.terms_used += v.terms_used;
  }
  return r;
}

SeriesResult e0_lambert(const Real& q, const Precision& prec) {
  ScopedDigits guard(prec);
  return e0_at_u(th::u_of_q(at_precision(q, prec.working_digits)), prec);
}

SeriesResult e0_hypergeometric(const Real& alpha, const Real& one_minus_alpha, const Precision& prec) {
  ScopedDigits guard(prec);
  if (alpha < 0 || alpha > 1) throw DomainError("E0 through alpha needs 0 <= alpha <= 1");
  return E0Hyper(prec)(at_precision(alpha, prec.working_digits), at_precision(one_minus_alpha, prec.working_digits),
                       prec.target_tol);
}

}  // namespace borwein::lvalue
