#include "borwein/quad.hpp"

#include "doctest.h"

using namespace borwein;
using borwein::quad::quad_de;

TEST_CASE("quad_de: constant") {
  Precision prec;
  ScopedDigits g(prec);
  const auto r = quad_de([](const Real&, const Real&) { return Real(1); }, Real("1e-30"), prec);
  CHECK(abs(r.value - 1) < Real("1e-30"));
  CHECK(r.method == Method::integral);
  CHECK(r.terms_used > 0);
}

TEST_CASE("quad_de: endpoint power singularities") {
  Precision prec;
  ScopedDigits g(prec);
  const Real third = Real(1) / 3;
  const auto r1 = quad_de([&](const Real&, const Real& omt) { return pow(omt, -third); }, Real("1e-28"), prec);
  CHECK(abs(r1.value - Real(3) / 2) < Real("1e-28"));
  CHECK(abs(r1.value - Real(3) / 2) <= r1.err_estimate + Real("1e-35"));
  // t^{1/3} / (t (1 - t)) * (1 - t) = t^{-2/3}; B(1/3, 1) = 3
  const auto r2 = quad_de(
      [&](const Real& t, const Real& omt) { return pow(t, third) / (t * omt) * omt; }, Real("1e-28"), prec);
  CHECK(abs(r2.value - 3) < Real("1e-28"));
}

TEST_CASE("quad_de: logarithmic endpoint and smooth integrand") {
  Precision prec;
  ScopedDigits g(prec);
  // int_0^1 log(1-t) / t dt = -pi^2/6
  const auto r = quad_de(
      [](const Real& t, const Real& omt) { return t < Real("0.5") ? Real(log1p(-t) / t) : Real(log(omt) / t); },
      Real("1e-28"), prec);
  CHECK(abs(r.value + pi() * pi() / 6) < Real("1e-28"));
  const auto e = quad_de([](const Real& t, const Real&) { return exp(t); }, Real("1e-30"), prec);
  CHECK(abs(e.value - (exp(Real(1)) - 1)) < Real("1e-30"));
}

TEST_CASE("quad_de: level cap") {
  Precision prec;
  ScopedDigits g(prec);
  CHECK_THROWS_AS(quad_de([](const Real& t, const Real&) { return sin(2000 * t); }, Real("1e-30"), prec, 2),
                  PrecisionError);
}
