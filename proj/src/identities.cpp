#include "borwein/hyper.hpp"
#include "borwein/lvalue.hpp"
#include "borwein/quad.hpp"
#include "borwein/thetanum.hpp"

#include <optional>

namespace borwein::lvalue {

namespace {

using hyper::PFQParams;

const Rational kThird(1, 3), kTwoThirds(2, 3), kFourThirds(4, 3), kFiveThirds(5, 3);

std::string point_text(const Real& x) { return to_decimal(x, 6); }

Real log_one_minus(const Real& t, const Real& omt) { return t < Real(1) / 2 ? log1p(-t) : log(omt); }

// int_0^alpha x^{e} dx / (x (1 - x)) through x = alpha t, against k alpha^e 2F1[e, 1; e + 1; alpha].
IdentityReport check_power_integral(const char* name, const Rational& e, const Real& alpha, const Precision& work,
                                    const Real& tol) {
  const Real ex = to_real(e);
  const Real oma = 1 - alpha;
  const auto integrand = [&](const Real& t, const Real& omt) -> Real {
    if (t == 0) return Real(0);
    return pow(t, ex - 1) / (oma + alpha * omt);
  };
  const Real scale = pow(alpha, ex);
  const Real lhs = scale * quad::quad_de(integrand, work.target_tol, work).value;
  const Real rhs = scale / ex * hyper::pfq({{e, 1}, {e + 1}}, alpha, oma, work).value;
  return make_report(name, lhs, rhs, tol, {"quad_de", "pfq"});
}

IdentityReport check_int3(const Real& alpha, const Precision& work, const Real& tol) {
  const Real oma = 1 - alpha;
  // ((1 - alpha t)^{-2/3} - (1 - alpha t)^{-1/3}) / t
  const auto integrand = [&](const Real& t, const Real& omt) -> Real {
    if (t == 0) return Real(0);
    const Real at = alpha * t;
    const Real l = log_one_minus(at, oma + alpha * omt);
    return (expm1(-2 * l / 3) - expm1(-l / 3)) / t;
  };
  const Real lhs = quad::quad_de(integrand, work.target_tol, work).value;
  const Real g5 = hyper::pfq({{1, 1, kFiveThirds}, {2, 2}}, alpha, oma, work).value;
  const Real g4 = hyper::pfq({{1, 1, kFourThirds}, {2, 2}}, alpha, oma, work).value;
  const Real rhs = 2 * alpha / 3 * g5 - alpha / 3 * g4;
  return make_report("int3", lhs, rhs, tol, {"quad_de", "pfq"});
}

IdentityReport check_lemma_e0(const Real& q, const Precision& work, const Real& tol) {
  const auto p = thetanum::theta_point(q, work);
  const Real lhs = e0_lambert(q, work).value;
  const Real rhs = e0_hypergeometric(p.alpha, p.one_minus_alpha, work).value;
  return make_report("lemma_E0", lhs, rhs, tol, {"lambert", "pfq"});
}

const std::vector<PFQParams>& hginterep_sets() {
  static const std::vector<PFQParams> sets{{{kThird, 1}, {kFourThirds}}, {{kTwoThirds, 1}, {kFiveThirds}}};
  return sets;
}

const std::vector<Rational>& geom_exponents() {
  static const std::vector<Rational> a{kThird, kTwoThirds, kFiveThirds};
  return a;
}

std::vector<Real> sweep_points(const std::string& name) {
  if (name == "int1" || name == "int2" || name == "int3") return {Real("0.1"), Real("0.5"), Real("0.9")};
  if (name == "lemma_E0") return {Real("0.05"), Real("0.1"), Real("0.2")};
  if (name == "hginterep") return {Real("0.5")};
  if (name == "geom") {
    std::vector<Real> x;
    for (int k = 1; k <= 9; ++k) x.push_back(Real(k) / 10);
    return x;
  }
  return {};
}

// Keeps the report with the largest abs_err / tol (failures first).
void keep_worst(std::optional<IdentityReport>& worst, IdentityReport r) {
  if (!worst) {
    worst = std::move(r);
    return;
  }
  if (worst->pass && !r.pass) {
    worst = std::move(r);
    return;
  }
  if (worst->pass == r.pass && r.abs_err * worst->tol > worst->abs_err * r.tol) worst = std::move(r);
}

void check_name(const std::string& name) {
  for (const auto& n : catalog())
    if (n == name) return;
  throw UsageError("unknown identity '" + name + "'");
}

}  // namespace

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names{"l1_alpha_integral", "l2_intermediate", "lemma_E0", "int1",
                                              "int2",              "int3",            "geom",     "hginterep"};
  return names;
}

IdentityReport check_geom(const Rational& a, const Real& x_in, const Precision& prec, const Real& tol) {
  const Precision work = prec.with_tol(tol / 100);
  ScopedDigits guard(work);
  const Real x = at_precision(x_in, work.working_digits);
  const Real ar = to_real(a);
  const Real lhs = ar * x * hyper::pfq({{1, a + 1}, {2}}, x, 1 - x, work).value;
  const Real rhs = expm1(-ar * log1p(-x));
  return make_report("geom", lhs, rhs, tol, {"pfq", "closed_form"});
}

IdentityReport check_identity_at(const std::string& name, const Real& point, const Precision& prec, const Real& tol) {
  check_name(name);
  const double t0 = now_seconds();
  const Precision work = prec.with_tol(tol / 100);
  ScopedDigits guard(work);
  const Real x = at_precision(point, work.working_digits);
  std::optional<IdentityReport> r;
  if (name == "int1") {
    r = check_power_integral("int1", kThird, x, work, tol);
  } else if (name == "int2") {
    r = check_power_integral("int2", kTwoThirds, x, work, tol);
  } else if (name == "int3") {
    r = check_int3(x, work, tol);
  } else if (name == "lemma_E0") {
    r = check_lemma_e0(x, work, tol);
  } else if (name == "geom") {
    for (const auto& a : geom_exponents()) keep_worst(r, check_geom(a, x, prec, tol));
  } else if (name == "hginterep") {
    for (const auto& p : hginterep_sets()) keep_worst(r, hyper::check_hginterep(p, x, prec, tol));
  } else {
    throw UsageError("identity '" + name + "' has no sample point");
  }
  r->name = name + " at " + point_text(x);
  r->seconds = now_seconds() - t0;
  return *r;
}

IdentityReport check_identity(const std::string& name, const Precision& prec, const Real& tol) {
  check_name(name);
  const double t0 = now_seconds();
  ScopedDigits guard(prec);
  if (name == "l1_alpha_integral" || name == "l2_intermediate") {
    const Precision work = prec.with_tol(tol / 100);
    const bool first = name == "l1_alpha_integral";
    const Real lhs = l_mellin(first ? 1 : 2, work).value;
    const Real rhs = first ? l_alpha_integral(1, work).value : l_rz_intermediate(2, work).value;
    return make_report(name, lhs, rhs, tol, {"mellin", first ? "alpha_integral" : "rz_intermediate"},
                       now_seconds() - t0);
  }
  std::optional<IdentityReport> worst;
  for (const auto& x : sweep_points(name)) keep_worst(worst, check_identity_at(name, x, prec, tol));
  worst->name = name;
  worst->seconds = now_seconds() - t0;
  return *worst;
}

}  // namespace borwein::lvalue
