// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "borwein/hyper.hpp"
#include "borwein/lvalue.hpp"
#include "borwein/suite.hpp"
#include "borwein/thetanum.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace borwein;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

int failures = 0;

void criterion(int k, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const double t0 = now_seconds();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " exception: " << e.what();
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1fs", now_seconds() - t0);
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << title << " [" << secs << "]"
            << o.detail.str() << std::endl;
  if (!o.pass) ++failures;
}

std::string sci(const Real& x) { return to_decimal(x, 3); }

}  // namespace

int main() {
  const Precision prec(40);
  ScopedDigits guard(prec);
  namespace th = thetanum;

  criterion(1, "exact q-series identities to order 500", [](Outcome& o) {
    const double t0 = now_seconds();
    const auto reports = suite::exact_checks(500);
    const double secs = now_seconds() - t0;
    for (const auto& r : reports)
      if (!r.pass) {
        o.pass = false;
        o.detail << " failed: " << r.name;
      }
    if (secs >= 60) o.pass = false;
    o.detail << " " << reports.size() << " identities, " << secs << "s (limit 60s)";
  });

  criterion(2, "hauptmodul |a - 2F1| <= 1e-20", [&](Outcome& o) {
    Real worst = 0;
    for (const char* qs : {"0.01", "0.05", "0.1", "0.2", "0.3", "0.4", "0.5"})
      worst = max(worst, abs(th::residual_hauptmodul(Real(qs), prec)));
    o.pass = worst <= Real("1e-20");
    o.detail << " max residual " << sci(worst);
  });

  criterion(3, "involution b(u) = c(1/(3u)) / (sqrt3 u) to 1e-20", [&](Outcome& o) {
    Real worst = 0;
    for (const Real& u : {Real("0.2"), Real("0.4"), th::switch_point(), Real(1), Real(2)}) {
      const Real lhs = th::eval_theta_u(th::Kind::b, u, prec, th::Regime::direct);
      const Real rhs = th::eval_theta_u(th::Kind::c, 1 / (3 * u), prec, th::Regime::direct) / (sqrt3() * u);
      worst = max(worst, abs(lhs - rhs));
    }
    o.pass = worst <= Real("1e-20");
    o.detail << " max |diff| " << sci(worst);
  });

  criterion(4, "differential relation: O(h^2) decay, extrapolated residual <= 1e-12", [&](Outcome& o) {
    for (const char* qs : {"0.1", "0.3"}) {
      const auto d = th::differential_check(Real(qs), prec, Real("1e-3"), 6);
      o.detail << " q=" << qs << " ratios";
      for (double r : d.ratio) {
        o.detail << " " << r;
        if (r < 3.8 || r > 4.2) o.pass = false;
      }
      o.detail << " residual " << sci(d.extrapolated_residual);
      if (d.extrapolated_residual > Real("1e-12")) o.pass = false;
    }
  });

  criterion(5, "L(f,n) = KdF combinations, n = 1, 2, 3", [&](Outcome& o) {
    const double t0 = now_seconds();
    for (int n = 1; n <= 3; ++n) {
      const Real lhs = lvalue::l_mellin(n, prec).value;
      const auto integral = lvalue::rhs_theorem(n, lvalue::Route::integral, prec);
      const auto series = lvalue::rhs_theorem(n, lvalue::Route::series, prec);
      const Real d1 = abs(lhs - integral.value);
      const Real d2 = abs(series.value - integral.value);
      o.detail << " n=" << n << ": |mellin-integral| " << sci(d1) << ", |series-integral| " << sci(d2) << " (err "
               << sci(series.err_estimate) << ")";
      if (d1 > Real("1e-10") || d2 > series.err_estimate || series.err_estimate > Real("1e-8")) o.pass = false;
    }
    const double secs = now_seconds() - t0;
    o.detail << " " << secs << "s";
    if (secs > 600) o.pass = false;
  });

  criterion(6, "|l_mellin(3) - l_dirichlet(10^6)| <= 1e-6", [&](Outcome& o) {
    const Real m = lvalue::l_mellin(3, prec).value;
    const auto d = lvalue::l_dirichlet(1000000);
    const Real diff = abs(m - d.value);
    o.pass = diff <= Real("1e-6");
    o.detail << " |diff| " << sci(diff) << " (tail estimate " << sci(d.err_estimate) << ")";
  });

  criterion(7, "identity catalog at 1e-12", [&](Outcome& o) {
    for (const auto& name : lvalue::catalog()) {
      const auto r = lvalue::check_identity(name, prec, Real("1e-12"));
      o.detail << " " << name << " " << sci(r.abs_err);
      if (!r.pass) o.pass = false;
    }
  });

  criterion(8, "KdF series vs integral at (1/2,1/2) to 1e-15; margins", [&](Outcome& o) {
    const Precision work = prec.with_tol(Real("1e-17"));
    const Real half = Real(1) / 2;
    Real worst = 0;
    for (const auto& name : hyper::theorem_block_names()) {
      const auto p = hyper::theorem_block(name);
      worst = max(worst, abs(hyper::kdf_series(p, half, half, work).value - hyper::kdf_integral(p, half, half, work).value));
      if (!hyper::kdf_margins(p).boundary_ok) {
        o.pass = false;
        o.detail << " " << name << " boundary_ok false";
      }
    }
    const auto m = hyper::kdf_margins(hyper::theorem_block("K1"));
    o.detail << " max |diff| " << sci(worst) << ", K1 margins " << m.m1.get_str() << " " << m.m2.get_str() << " "
             << m.m3.get_str();
    if (worst > Real("1e-15")) o.pass = false;
    if (m.m1 != Rational(2, 3) || m.m2 != 1 || m.m3 != Rational(2, 3) || !m.boundary_ok) o.pass = false;
  });

  return failures == 0 ? 0 : 1;
}
