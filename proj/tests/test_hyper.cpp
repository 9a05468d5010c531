#include "borwein/hyper.hpp"
#include "borwein/lvalue.hpp"
#include "borwein/quad.hpp"

#include "doctest.h"

using namespace borwein;
using namespace borwein::hyper;

namespace {

const Rational third(1, 3), two_thirds(2, 3), four_thirds(4, 3), five_thirds(5, 3);

// 2F1(a, b; c; x) = int_0^1 t^{b-1} (1-t)^{c-b-1} (1 - x t)^{-a} dt / B(b, c-b)
Real euler_2f1(const Real& a, const Real& b, const Real& c, const Real& x, const Precision& prec) {
  const auto r = quad::quad_de(
      [&](const Real& t, const Real& omt) { return pow(t, b - 1) * pow(omt, c - b - 1) * pow((1 - x) + x * omt, -a); },
      prec.target_tol, prec);
  return r.value * beta_normalizer(b, c);
}

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7, 5), 0) == 1);
  CHECK(pochhammer(Rational(1), 5) == 120);
  CHECK(pochhammer(third, 2) == Rational(4, 9));
  ScopedDigits g(30);
  CHECK(abs(pochhammer(Real("0.5"), 3) - Real("1.875")) < Real("1e-28"));
}

TEST_CASE("term recurrence matches pochhammer products for n <= 50") {
  const std::vector<Rational> up{third, Rational(1), five_thirds}, lo{Rational(2), four_thirds};
  const Rational x(1, 2);
  Rational t = 1, fact = 1;
  for (int n = 0; n <= 50; ++n) {
    Rational direct = 1;
    for (const auto& a : up) direct *= pochhammer(a, n);
    for (const auto& b : lo) direct /= pochhammer(b, n);
    Rational xn = 1;
    for (int k = 0; k < n; ++k) xn *= x;
    direct *= xn / fact;
    CHECK(t == direct);
    Rational ratio = x / (n + 1);
    for (const auto& a : up) ratio *= a + n;
    for (const auto& b : lo) ratio /= b + n;
    t *= ratio;
    fact *= n + 1;
  }
}

TEST_CASE("pfq: closed forms") {
  Precision prec;
  ScopedDigits g(prec);
  const Real half("0.5");
  CHECK(abs(pfq({{1, 2}, {2}}, half, prec).value - 2) < Real("1e-29"));
  CHECK(abs(pfq({{third}, {}}, half, prec).value - cbrt(Real(2))) < Real("1e-29"));
  const Real geom = 3 * (pow(half, -Real(1) / 3) - 1) / half;
  CHECK(abs(pfq({{1, four_thirds}, {2}}, half, prec).value - geom) < Real("1e-29"));
  // 1F1(1; 1; x) = e^x
  CHECK(abs(pfq({{1}, {1}}, Real(3), prec).value - exp(Real(3))) < Real("1e-28"));
  // terminating: 2F1(-3, 1; 1; x) = (1-x)^3
  CHECK(abs(pfq({{-3, 1}, {1}}, Real(5), prec).value - Real(-64)) < Real("1e-28"));
}

TEST_CASE("pfq: 2F1 near 1 against the Euler integral") {
  Precision prec;
  ScopedDigits g(prec);
  for (const char* xs : {"0.75", "0.99", "0.999999"}) {
    const Real x(xs);
    const Real v = pfq({{third, two_thirds}, {1}}, x, 1 - x, prec).value;
    const Real oracle = euler_2f1(to_real(third), to_real(two_thirds), Real(1), x, prec);
    CHECK(abs(v - oracle) < Real("1e-27") * abs(oracle));
    const Real w = pfq({{third, 1}, {four_thirds}}, x, 1 - x, prec).value;
    const Real oracle2 = euler_2f1(Real(1), to_real(third), to_real(four_thirds), x, prec);
    CHECK(abs(w - oracle2) < Real("1e-27") * abs(oracle2));
  }
  // x < 0 through the Pfaff transform: 2F1(1, 1; 2; x) = log(1 - x) / (-x)
  const Real x("-0.9");
  CHECK(abs(pfq({{1, 1}, {2}}, x, prec).value - log1p(-x) / (-x)) < Real("1e-29"));
}

TEST_CASE("pfq: unit argument") {
  Precision prec;
  ScopedDigits g(prec);
  // Gauss: 2F1(1/3, 2/3; 2; 1) = Gamma(2) Gamma(1) / (Gamma(5/3) Gamma(4/3))
  const Real gauss = 1 / (gamma(to_real(five_thirds)) * gamma(to_real(four_thirds)));
  CHECK(abs(pfq({{third, two_thirds}, {2}}, Real(1), Real(0), prec).value - gauss) < Real("1e-28"));
  // 3F2(1, 1, 1; 2, 2; 1) = zeta(2)
  const auto z2 = pfq({{1, 1, 1}, {2, 2}}, Real(1), Real(0), prec);
  CHECK(abs(z2.value - pi() * pi() / 6) < Real("1e-20"));
}

TEST_CASE("pfq: domain errors") {
  Precision prec;
  CHECK_THROWS_AS(pfq({{third, two_thirds}, {1}}, Real("1.5"), prec), DomainError);
  CHECK_THROWS_AS(pfq({{third, two_thirds}, {1}}, Real(1), Real(0), prec), DomainError);
  CHECK_THROWS_AS(pfq({{1, 1}, {-2}}, Real("0.5"), prec), DomainError);
}

TEST_CASE("kdf_margins") {
  const auto m = kdf_margins(theorem_block("K1"));
  CHECK(m.m1 == two_thirds);
  CHECK(m.m2 == 1);
  CHECK(m.m3 == two_thirds);
  CHECK(m.boundary_ok);
  for (const auto& name : theorem_block_names()) {
    const auto mb = kdf_margins(theorem_block(name));
    CHECK(mb.m1 > 0);
    CHECK(mb.m2 > 0);
    CHECK(mb.m3 > 0);
    CHECK(mb.boundary_ok);
  }
  // a' = a and equal b-sums apart from one extra upper parameter
  const KdFParams p{{1}, {1}, {1, 2}, {1}, {third, two_thirds}, {1}};
  const auto mp = kdf_margins(p);
  CHECK(mp.m1 == -2);
  CHECK_FALSE(mp.boundary_ok);
}

TEST_CASE("kdf_series: origin, slice and symmetry") {
  Precision prec;
  ScopedDigits g(prec);
  const auto k1 = theorem_block("K1");
  CHECK(kdf_series(k1, Real(0), Real(0), prec).value == 1);
  const Real x("0.4");
  const Real slice = pfq(x_slice(k1), x, prec).value;
  CHECK(abs(kdf_series(k1, x, Real(0), prec).value - slice) < Real("1e-29"));
  const Real u("0.3"), v("0.6");
  for (const auto& name : theorem_block_names()) {
    const auto p = theorem_block(name);
    const Real a = kdf_series(p, u, v, prec).value;
    const Real b = kdf_series(swapped(p), v, u, prec).value;
    CHECK(abs(a - b) < Real("1e-28"));
  }
}

TEST_CASE("kdf_series against kdf_integral at interior points") {
  Precision prec;
  ScopedDigits g(prec);
  const Real half("0.5"), x("0.3"), y("0.8");
  for (const auto& name : theorem_block_names()) {
    const auto p = theorem_block(name);
    CHECK(abs(kdf_series(p, half, half, prec).value - kdf_integral(p, half, half, prec).value) < Real("1e-15"));
    const auto s = kdf_series(p, x, y, prec);
    const auto i = kdf_integral(p, x, y, prec);
    CHECK(abs(s.value - i.value) <= s.err_estimate + i.err_estimate + Real("1e-28"));
  }
}

TEST_CASE("kdf at (1,1): both routes against the Mellin value") {
  Precision prec;
  ScopedDigits g(prec);
  const auto k1 = theorem_block("K1");
  const Real l1 = lvalue::l_mellin(1, prec).value;
  const auto integral = kdf_integral(k1, Real(1), Real(1), prec);
  CHECK(abs(integral.value - 27 * l1) < Real("1e-27"));
  const auto series = kdf_series(k1, Real(1), Real(1), prec.with_tol(Real("1e-12")));
  CHECK(series.method == Method::accelerated);
  CHECK(series.err_estimate <= Real("1e-12"));
  CHECK(abs(series.value - integral.value) <= series.err_estimate);
}

TEST_CASE("kdf: rejected requests") {
  Precision prec;
  const KdFParams bad{{1}, {1}, {1, 2}, {1}, {third, two_thirds}, {1}};
  CHECK_THROWS_AS(kdf_series(bad, Real(1), Real("0.5"), prec), DomainError);
  KdFParams two_joint = theorem_block("K1");
  two_joint.a = {1, 1};
  two_joint.ap = {2, 2};
  CHECK_THROWS_AS(kdf_integral(two_joint, Real("0.5"), Real("0.5"), prec), DomainError);
  KdFParams reversed = theorem_block("K1");
  reversed.a = {2};
  reversed.ap = {1};
  CHECK_THROWS_AS(kdf_integral(reversed, Real("0.5"), Real("0.5"), prec), DomainError);
  CHECK_THROWS_AS(kdf_series(theorem_block("K1"), Real("1.2"), Real(0), prec), DomainError);
}

TEST_CASE("kdf_integral at the origin") {
  Precision prec;
  ScopedDigits g(prec);
  for (const auto& name : theorem_block_names())
    CHECK(abs(kdf_integral(theorem_block(name), Real(0), Real(0), prec).value - 1) < Real("1e-28"));
}

TEST_CASE("check_hginterep") {
  Precision prec;
  ScopedDigits g(prec);
  const PFQParams p1{{third, 1}, {four_thirds}}, p2{{two_thirds, 1}, {five_thirds}};
  const auto z0 = check_hginterep(p1, Real(0), prec, Real("1e-20"));
  CHECK(z0.pass);
  CHECK(abs(z0.lhs - 3) < Real("1e-25"));  // B(1/3, 1)
  const auto r1 = check_hginterep(p1, Real("0.5"), prec, Real("1e-15"));
  CHECK(r1.pass);
  // int_0^a x^{1/3} dx / (x (1-x)) = a^{1/3} B(1/3,1) 2F1[1/3,1;4/3;a]
  const Real a("0.5");
  const auto direct = quad::quad_de(
      [&](const Real& t, const Real& omt) { return pow(a * t, Real(1) / 3) / (t * ((1 - a) + a * omt)); },
      Real("1e-30"), prec);
  const auto tight = check_hginterep(p1, a, prec, Real("1e-26"));
  CHECK(tight.pass);
  CHECK(abs(direct.value - cbrt(a) * tight.lhs) < Real("1e-25"));
  const auto r2 = check_hginterep(p2, Real("0.5"), prec, Real("1e-15"));
  CHECK(r2.pass);
  CHECK_THROWS_AS(check_hginterep({{2, 1}, {1}}, Real("0.5"), prec, Real("1e-15")), DomainError);
}

TEST_CASE("geometric closed form") {
  Precision prec;
  for (const auto& a : {third, two_thirds, five_thirds, Rational(1)})
    for (int k = 1; k <= 9; ++k) {
      const auto r = lvalue::check_geom(a, Real(k) / 10, prec, Real("1e-25"));
      CHECK_MESSAGE(r.pass, "a = " << a.get_str() << ", x = " << k << "/10");
    }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("4/3") == four_thirds);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  const auto list = parse_rational_list("1,4/3");
  REQUIRE(list.size() == 2);
  CHECK(list[1] == four_thirds);
  CHECK(parse_rational_list("").empty());
}
