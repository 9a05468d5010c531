#include "borwein/suite.hpp"

#include "borwein/hyper.hpp"
#include "borwein/lvalue.hpp"
#include "borwein/qexp.hpp"
#include "borwein/thetanum.hpp"

#include <array>

namespace borwein::suite {

const char* to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::exact: return "exact";
    case Suite::numeric: return "numeric";
    case Suite::theorem: return "theorem";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "exact") return Suite::exact;
  if (name == "numeric") return Suite::numeric;
  if (name == "theorem") return Suite::theorem;
  throw UsageError("unknown suite '" + name + "'");
}

namespace {

using qexp::QSeries;

IdentityReport exact_report(const std::string& name, const QSeries& residual, int order, double t0) {
  long nonzero = 0;
  for (const auto& c : residual.coeffs())
    if (sgn(c) != 0) ++nonzero;
  auto r = make_report(name, Real(nonzero), Real(0), Real(0), {"exact", "order " + std::to_string(order)},
                       now_seconds() - t0);
  if (residual.order() < order * residual.denom()) {
    r.pass = false;
    r.note = "residual known only through e = " + std::to_string(residual.order()) + " on the 1/" +
             std::to_string(residual.denom()) + " grid";
  }
  return r;
}

// Runs one check; an exception turns into a failed report.
template <class F>
IdentityReport guarded(const std::string& name, F&& check) {
  const double t0 = now_seconds();
  try {
    return check();
  } catch (const std::exception& e) {
    IdentityReport r;
    r.name = name;
    r.lhs = r.rhs = r.abs_err = r.tol = Real(0);
    r.pass = false;
    r.methods = {"error", "error"};
    r.seconds = now_seconds() - t0;
    r.note = e.what();
    return r;
  }
}

// Integral-route right-hand sides shared by the numeric and theorem checks of one run.
struct RhsCache {
  std::array<std::optional<SeriesResult>, 3> integral;
  const SeriesResult& get(int n, const Precision& prec) {
    auto& slot = integral[static_cast<std::size_t>(n - 1)];
    if (!slot) slot = lvalue::rhs_theorem(n, lvalue::Route::integral, prec);
    return *slot;
  }
};

std::vector<IdentityReport> numeric_tail(const Precision& prec, RhsCache& cache);
std::vector<IdentityReport> numeric_impl(const Precision& prec, RhsCache& cache);
std::vector<IdentityReport> theorem_impl(const Precision& prec, const Real& tol, RhsCache& cache);

}  // namespace

std::vector<IdentityReport> exact_checks(int order) {
  if (order < 1) throw UsageError("order must be positive");
  using qexp::Lambert;
  using qexp::Theta;
  std::vector<IdentityReport> out;
  const auto run = [&](const std::string& name, const std::function<QSeries()>& residual) {
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      return exact_report(name, residual(), order, t0);
    }));
  };
  const QSeries a = qexp::theta_series(Theta::a, order);
  const QSeries b = qexp::theta_series(Theta::b, order);
  const QSeries c = qexp::theta_series(Theta::c, order);
  const QSeries c3 = qexp::substitute_power(c, 3).truncated(order);
  const Rational third(1, 3), ninth(1, 9);

  run("cubic a^3 = b^3 + c^3", [&] { return qexp::power(a, 3) - qexp::power(b, 3) - qexp::power(c, 3); });
  run("c(q^3) = (a - b)/3", [&] { return c3 - third * (a - b); });
  const QSeries b_root = qexp::substitute_root(qexp::theta_series(Theta::b, 3 * order), 3);
  run("b(q^1/3) = a - c", [&] { return b_root - a + c; });
  run("b c(q^3) Lambert", [&] { return b * c3 - qexp::lambert_series(Lambert::bc3, order); });
  run("c Lambert", [&] { return c - qexp::lambert_series(Lambert::c, order); });
  run("c^3 Lambert", [&] { return qexp::power(c, 3) - qexp::lambert_series(Lambert::c_cubed, order); });
  run("q d/dq E0", [&] {
    return qexp::q_differentiate(qexp::lambert_series(Lambert::E0, order)) - ninth * (b_root * c) + third * (b * c3);
  });
  const QSeries f = qexp::f_coefficients(order);
  run("3f = b^2 c(q^3)", [&] { return Rational(3) * f - b * b * c3; });
  run("b residue classes", [&] {
    const auto rc = qexp::theta_b_residue_counts(order);
    QSeries r(1, order);
    for (int m = 0; m <= order; ++m) r[m] = rc.class1[m] - rc.class2[m];
    return r;
  });
  const std::array<qexp::EtaFactor, 2> eta_b{{{1, 3}, {3, -1}}};
  run("eta b", [&] { return qexp::eta_quotient(eta_b, order) - b; });
  // c = 3 eta(q^3)^3 / eta(q)
  const std::array<qexp::EtaFactor, 2> eta_c{{{3, 3}, {1, -1}}};
  run("eta c", [&] { return Rational(3) * qexp::eta_quotient(eta_c, order) - c; });
  // eta(q)^6 eta(q^9)^3 / eta(q^3)^3 is b^2 c(q^3) / 3 = f
  const std::array<qexp::EtaFactor, 3> eta_f{{{1, 6}, {9, 3}, {3, -3}}};
  run("eta f", [&] { return qexp::eta_quotient(eta_f, order) - f; });
  return out;
}

std::vector<IdentityReport> numeric_checks(const Precision& prec) {
  RhsCache cache;
  return numeric_impl(prec, cache);
}

std::vector<IdentityReport> theorem_checks(const Precision& prec, const Real& tol) {
  RhsCache cache;
  return theorem_impl(prec, tol, cache);
}

namespace {

std::vector<IdentityReport> numeric_impl(const Precision& prec, RhsCache& cache) {
  ScopedDigits outer(prec);
  namespace th = thetanum;
  std::vector<IdentityReport> out;
  const Real tol20("1e-20");
  const auto q_grid = {"0.01", "0.05", "0.1", "0.2", "0.3", "0.4", "0.5"};
  for (const char* qs : q_grid) {
    const std::string name = std::string("hauptmodul at q=") + qs;
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      ScopedDigits guard(prec);
      const Real q(qs);
      const Real a = th::eval_theta(th::Kind::a, q, prec);
      const Real res = th::residual_hauptmodul(q, prec);
      return make_report(name, a, a - res, tol20, {"theta", "2F1"}, now_seconds() - t0);
    }));
  }
  for (const char* qs : q_grid) {
    const std::string name = std::string("cubic at q=") + qs;
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      ScopedDigits guard(prec);
      const Real q(qs);
      const auto d = th::Regime::direct;
      const Real a = th::eval_theta(th::Kind::a, q, prec, d);
      const Real b = th::eval_theta(th::Kind::b, q, prec, d);
      const Real c = th::eval_theta(th::Kind::c, q, prec, d);
      const Real a3 = a * a * a;
      return make_report(name, a3, b * b * b + c * c * c, tol20 * a3, {"lattice", "lattice"}, now_seconds() - t0);
    }));
  }
  for (const char* label : {"0.2", "0.4", "1/sqrt3", "1", "2"}) {
    const std::string name = std::string("involution at u=") + label;
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      ScopedDigits guard(prec);
      const Real u = std::string(label) == "1/sqrt3" ? th::switch_point() : Real(label);
      const auto d = th::Regime::direct;
      const Real lhs = th::eval_theta_u(th::Kind::b, u, prec, d);
      const Real rhs = th::eval_theta_u(th::Kind::c, 1 / (3 * u), prec, d) / (sqrt3() * u);
      return make_report(name, lhs, rhs, tol20, {"lattice", "lattice"}, now_seconds() - t0);
    }));
  }
  for (const char* qs : {"0.1", "0.3"}) {
    const std::string name = std::string("differential at q=") + qs;
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      ScopedDigits guard(prec);
      const auto d = th::differential_check(Real(qs), prec, Real("1e-3"), 6);
      auto r = make_report(name, d.target + d.extrapolated_residual, d.target, Real("1e-12"),
                           {"central_difference", "closed_form"}, now_seconds() - t0);
      for (double ratio : d.ratio)
        if (ratio < 3.5 || ratio > 4.5) {
          r.pass = false;
          r.note = "error ratio under h halving " + std::to_string(ratio) + ", expected about 4";
        }
      return r;
    }));
  }
  const auto tail = numeric_tail(prec, cache);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<IdentityReport> numeric_tail(const Precision& prec, RhsCache& cache) {
  ScopedDigits outer(prec);
  std::vector<IdentityReport> out;
  for (const auto& name : lvalue::catalog())
    out.push_back(guarded(name, [&] { return lvalue::check_identity(name, prec, Real("1e-12")); }));
  for (const auto& block : hyper::theorem_block_names()) {
    const std::string name = "kdf " + block + " series vs integral at (1/2,1/2)";
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      const Precision work = prec.with_tol(Real("1e-17"));
      ScopedDigits guard(work);
      const auto p = hyper::theorem_block(block);
      const Real half = Real(1) / 2;
      const Real s = hyper::kdf_series(p, half, half, work).value;
      const Real i = hyper::kdf_integral(p, half, half, work).value;
      return make_report(name, s, i, Real("1e-15"), {"series", "integral"}, now_seconds() - t0);
    }));
  }
  out.push_back(guarded("kdf margins", [&] {
    const double t0 = now_seconds();
    const auto m = hyper::kdf_margins(hyper::theorem_block("K1"));
    long bad = 0;
    if (m.m1 != Rational(2, 3) || m.m2 != 1 || m.m3 != Rational(2, 3)) ++bad;
    for (const auto& block : hyper::theorem_block_names())
      if (!hyper::kdf_margins(hyper::theorem_block(block)).boundary_ok) ++bad;
    return make_report("kdf margins", Real(bad), Real(0), Real(0), {"exact", "margins"}, now_seconds() - t0);
  }));
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "L(f," + std::to_string(n) + ") kdf series vs integral at (1,1)";
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      ScopedDigits guard(prec);
      const auto& i = cache.get(n, prec);
      const auto s = lvalue::rhs_theorem(n, lvalue::Route::series, prec);
      auto r = make_report(name, s.value, i.value, s.err_estimate + i.err_estimate, {"kdf_series", "kdf_integral"},
                           now_seconds() - t0);
      if (s.err_estimate > Real("1e-8")) {
        r.pass = false;
        r.note = "series error estimate " + to_decimal(s.err_estimate, 3) + " above 1e-8";
      }
      return r;
    }));
  }
  return out;
}

std::vector<IdentityReport> theorem_impl(const Precision& prec, const Real& tol, RhsCache& cache) {
  ScopedDigits outer(prec);
  std::vector<IdentityReport> out;
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "L(f," + std::to_string(n) + ")";
    out.push_back(guarded(name, [&] {
      const double t0 = now_seconds();
      const Precision work = prec.with_tol(tol / 100);
      ScopedDigits guard(prec);
      const Real lhs = lvalue::l_mellin(n, work).value;
      const Real rhs = cache.get(n, prec).value;
      return make_report(name, lhs, rhs, tol, {"mellin", "kdf_integral"}, now_seconds() - t0);
    }));
  }
  return out;
}

}  // namespace

SuiteReport run(const Options& opt, const Progress& progress) {
  if (opt.digits < 15) throw UsageError("--digits must be at least 15");
  SuiteReport report;
  report.tool_version = BORWEIN_VERSION;
  report.digits = opt.digits;
  const double t0 = now_seconds();
  const Precision prec(opt.digits);
  ScopedDigits guard(prec);
  const Real tol = opt.tol ? at_precision(*opt.tol, prec.working_digits) : Real(kTheoremTol);
  const auto add = [&](std::vector<IdentityReport> checks) {
    for (auto& c : checks) {
      if (progress) progress(c);
      report.all_pass = report.all_pass && c.pass;
      report.checks.push_back(std::move(c));
    }
  };
  RhsCache cache;
  if (opt.suite == Suite::all || opt.suite == Suite::exact) add(exact_checks(opt.order));
  if (opt.suite == Suite::all || opt.suite == Suite::numeric) add(numeric_impl(prec, cache));
  if (opt.suite == Suite::all || opt.suite == Suite::theorem) add(theorem_impl(prec, tol, cache));
  report.total_seconds = now_seconds() - t0;
  return report;
}

}  // namespace borwein::suite
