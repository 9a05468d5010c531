#include "borwein/qexp.hpp"

#include "doctest.h"

#include <complex>
#include <sstream>

using namespace borwein;
using namespace borwein::qexp;

namespace {

QSeries poly(int d, std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QSeries(d, std::move(r));
}

// Oracle: coefficients of a and b by summing omega^(x-y) as complex doubles.
void lattice_oracle(int n, std::vector<long>& a, std::vector<long>& b, std::vector<long>& c_e) {
  const std::complex<double> w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  std::vector<std::complex<double>> bc(n + 1);
  a.assign(n + 1, 0);
  c_e.assign(3 * n + 1, 0);
  const int r = 2 * n + 3;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y) {
      const long q = 1L * x * x + 1L * x * y + 1L * y * y;
      if (q <= n) {
        ++a[q];
        bc[q] += std::pow(w, x - y);
      }
      const long e = 3 * (q + x + y) + 1;
      if (e >= 0 && e <= 3 * n) ++c_e[e];
    }
  b.resize(n + 1);
  for (int m = 0; m <= n; ++m) b[m] = std::lround(bc[m].real());
}

}  // namespace

TEST_CASE("mul: truncated Cauchy product") {
  CHECK((mul(poly(1, {1, 1}), poly(1, {1, -1})) - poly(1, {1, 0, -1}).truncated(1)).is_zero());
  const auto sq = mul(poly(1, {1, -3, 0}), poly(1, {1, -3, 0}));
  CHECK(sq[0] == 1);
  CHECK(sq[1] == -6);
  CHECK(sq[2] == 9);
  const auto p = mul(poly(1, {1, 1, 1, 1, 1, 1}), poly(1, {1, 2, 3, 4}));
  CHECK(p.order() == 3);
  CHECK(p[3] == 10);
}

TEST_CASE("mul: mixed grids lift to the finer denominator") {
  const auto x = poly(1, {1, 1});      // 1 + q
  const auto y = poly(3, {0, 1, 0, 0});  // q^(1/3)
  const auto p = mul(x, y);
  CHECK(p.denom() == 3);
  CHECK(p.order() == 3);
  CHECK(p[1] == 1);
  CHECK(p[3] == 0);  // q^(4/3) is beyond the order
}

TEST_CASE("substitute_power and substitute_root") {
  const auto s = substitute_power(poly(1, {1, 1}), 3);
  CHECK(s.denom() == 1);
  CHECK(s.order() == 3);
  CHECK(s[3] == 1);
  CHECK(s[1] == 0);

  const auto t = substitute_power(poly(3, {0, 1, 2}), 3);  // q^(1/3) + 2 q^(2/3) -> q + 2 q^2
  CHECK(t.denom() == 1);
  CHECK(t[1] == 1);
  CHECK(t[2] == 2);

  const auto id = substitute_power(poly(3, {4, 5, 6}), 1);
  CHECK((id - poly(3, {4, 5, 6})).is_zero());

  const auto r = substitute_root(poly(1, {1, -3}), 3);
  CHECK(r.denom() == 3);
  CHECK(r[1] == -3);
}

TEST_CASE("q_differentiate") {
  const auto d1 = q_differentiate(poly(3, {0, 1}));
  CHECK(d1[1] == Rational(1, 3));
  CHECK(q_differentiate(poly(1, {7})).is_zero());
  const auto d2 = q_differentiate(poly(3, {0, 1, 0, -1}));
  CHECK(d2[1] == Rational(1, 3));
  CHECK(d2[3] == -1);
}

TEST_CASE("chi3") {
  CHECK(chi3(1) == 1);
  CHECK(chi3(2) == -1);
  CHECK(chi3(6) == 0);
  CHECK(chi3(-1) == -1);
  for (long long m = -30; m <= 30; ++m)
    for (long long n = -30; n <= 30; ++n) CHECK(chi3(m * n) == chi3(m) * chi3(n));
}

TEST_CASE("theta series against the complex-omega lattice oracle") {
  std::vector<long> a, b, c;
  lattice_oracle(40, a, b, c);
  const auto ta = theta_series(Theta::a, 40);
  const auto tb = theta_series(Theta::b, 40);
  const auto tc = theta_series(Theta::c, 40);
  for (int m = 0; m <= 40; ++m) {
    CHECK(ta[m] == a[m]);
    CHECK(tb[m] == b[m]);
  }
  for (int e = 0; e <= 120; ++e) CHECK(tc[e] == c[e]);

  // frozen from the oracle
  const std::vector<long> a4 = {1, 6, 0, 6, 6};
  for (int m = 0; m <= 4; ++m) CHECK(theta_series(Theta::a, 4)[m] == a4[m]);
  const auto b1 = theta_series(Theta::b, 1);
  CHECK(b1[0] == 1);
  CHECK(b1[1] == -3);
  CHECK(*tc.valuation() == 1);
  CHECK(tc[1] == 3);
}

TEST_CASE("theta b residue classes balance at every norm") {
  const auto rc = theta_b_residue_counts(300);
  for (int m = 0; m <= 300; ++m) CHECK(rc.class1[m] == rc.class2[m]);
  CHECK(rc.class1[1] == 3);
  CHECK(rc.same[1] == 0);
}

TEST_CASE("eta quotients") {
  const EtaFactor unit[] = {{1, 1}, {1, -1}};
  const auto one = eta_quotient(unit, 20);
  CHECK(one[0] == 1);
  CHECK((one - poly(1, {1}).lifted(1)).truncated(0).is_zero());
  for (int e = 1; e <= 20; ++e) CHECK(one[e] == 0);

  const EtaFactor b_spec[] = {{1, 3}, {3, -1}};
  CHECK((eta_quotient(b_spec, 60) - theta_series(Theta::b, 60)).is_zero());

  const EtaFactor c_spec[] = {{3, 3}, {1, -1}};
  auto c = eta_quotient(c_spec, 60);
  c *= 3;
  CHECK(c.denom() == 3);
  CHECK((c - theta_series(Theta::c, 60)).is_zero());

  // eta(q)^6 eta(q^9)^3 / eta(q^3)^3 = f (leading term q)
  const EtaFactor f_spec[] = {{1, 6}, {9, 3}, {3, -3}};
  const auto fe = eta_quotient(f_spec, 60);
  CHECK(fe.denom() == 1);
  CHECK(*fe.valuation() == 1);
  CHECK((fe - f_coefficients(60)).is_zero());

  const EtaFactor bad[] = {{1, 1}};
  CHECK_THROWS_AS(eta_quotient(bad, 10), DomainError);
}

TEST_CASE("Lambert series leading coefficients") {
  CHECK(lambert_series(Lambert::bc3, 1)[1] == 3);
  CHECK(lambert_series(Lambert::c_cubed, 1)[1] == 27);
  const auto e0 = lambert_series(Lambert::E0, 2);
  CHECK(e0.denom() == 3);
  CHECK(e0[1] == 1);
  CHECK(e0[2] == Rational(-3, 2));  // N=2: chi(2) sigma_{-1}(2) = -3/2
}

TEST_CASE("f coefficients") {
  // oracle: naive triple product of the complex-omega lattice expansions
  std::vector<long> a, b, c;
  lattice_oracle(12, a, b, c);
  std::vector<long> c3(13, 0);
  for (int e = 0; e <= 12; ++e) c3[e] = c[e];  // c(q^3): q^(e/3) -> q^e
  std::vector<long> oracle(13, 0);
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; i + j <= 12; ++j)
      for (int k = 0; i + j + k <= 12; ++k) oracle[i + j + k] += b[i] * b[j] * c3[k];

  const auto f = f_coefficients(12);
  CHECK(f.denom() == 1);
  CHECK(f.is_integral());
  for (int n = 0; n <= 12; ++n) CHECK(f[n] * 3 == oracle[n]);

  // frozen from the oracle above
  const std::vector<long> frozen = {0, 1, -6, 9, 13, -48, 27, 50, -102, 81, 72, -240, 117};
  for (int n = 0; n <= 12; ++n) CHECK(f[n] == frozen[n]);

  const auto fast = f_coefficients_int(400);
  const auto exact = f_coefficients(400);
  for (int n = 0; n <= 400; ++n) CHECK(exact[n] == fast[n]);
}

TEST_CASE("series identities to order 120") {
  const int n = 120;
  const auto a = theta_series(Theta::a, n);
  const auto b = theta_series(Theta::b, n);
  const auto c = theta_series(Theta::c, n);
  const auto c3 = substitute_power(theta_series(Theta::c, n / 3 + 1), 3).truncated(n);

  CHECK((mul(mul(a, a), a) - mul(mul(b, b), b) - mul(mul(c, c), c)).is_zero());
  auto rel1 = a - b;
  rel1 *= Rational(1, 3);
  CHECK((c3 - rel1).is_zero());
  CHECK((substitute_root(b, 3) - a + c).is_zero());
  CHECK((mul(b, c3) - lambert_series(Lambert::bc3, n)).is_zero());
  CHECK((c - lambert_series(Lambert::c, n)).is_zero());
  CHECK((mul(mul(c, c), c) - lambert_series(Lambert::c_cubed, n)).is_zero());

  auto rhs = mul(substitute_root(b, 3), c);
  rhs *= Rational(1, 9);
  auto sub = mul(b, c3);
  sub *= Rational(1, 3);
  CHECK((q_differentiate(lambert_series(Lambert::E0, n)) - rhs + sub).is_zero());
}

TEST_CASE("dump format") {
  std::ostringstream os;
  dump(os, theta_series(Theta::a, 2));
  CHECK(os.str() == "0/1\t1/1\n1/1\t6/1\n2/1\t0/1\n");
  std::ostringstream e0;
  dump(e0, lambert_series(Lambert::E0, 1));
  CHECK(e0.str().rfind("1/3\t1/1\n", 0) == 0);
}
