#include "borwein/qexp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace borwein::qexp {

namespace {

int isqrt_ceil(long long n) {
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return static_cast<int>(r);
}

// Common denominator of all coefficients and the scaled integer numerators.
mpz_class integer_scaled(const QSeries& s, std::vector<mpz_class>& out) {
  mpz_class l = 1;
  for (const auto& c : s.coeffs()) {
    if (sgn(c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  out.resize(s.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& c = s.coeffs()[i];
    out[i] = c.get_num() * (l / c.get_den());
  }
  return l;
}

std::vector<int> support(const std::vector<mpz_class>& v) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) idx.push_back(static_cast<int>(i));
  return idx;
}

// q-order N on grid d -> e-order.
int e_order(int order, int d) { return order * d; }

}  // namespace

QSeries::QSeries(int denom, int order) : denom_(denom) {
  if (denom < 1) throw DomainError("series denominator must be positive");
  if (order < 0) throw DomainError("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(int denom, std::vector<Rational> coeffs) : denom_(denom), coeffs_(std::move(coeffs)) {
  if (denom < 1) throw DomainError("series denominator must be positive");
  if (coeffs_.empty()) coeffs_.assign(1, Rational(0));
}

QSeries QSeries::lifted(int factor) const {
  if (factor == 1) return *this;
  QSeries r(denom_ * factor, order() * factor);
  for (int e = 0; e <= order(); ++e) r.coeffs_[static_cast<std::size_t>(e * factor)] = coeffs_[e];
  return r;
}

QSeries QSeries::truncated(int ord) const {
  if (ord >= order()) return *this;
  return QSeries(denom_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + ord + 1));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::optional<int> QSeries::valuation() const {
  for (int e = 0; e <= order(); ++e)
    if (sgn(coeffs_[e]) != 0) return e;
  return std::nullopt;
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Real QSeries::evaluate(const Real& q) const {
  // Horner in t = q^(1/d).
  const Real t = denom_ == 1 ? q : pow(q, Real(1) / denom_);
  Real acc = 0;
  for (int e = order(); e >= 0; --e) acc = acc * t + to_real(coeffs_[e]);
  return acc;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::pair<QSeries, QSeries> unify(const QSeries& a, const QSeries& b) {
  const int d = std::lcm(a.denom(), b.denom());
  QSeries la = a.lifted(d / a.denom());
  QSeries lb = b.lifted(d / b.denom());
  const int ord = std::min(la.order(), lb.order());
  return {la.truncated(ord), lb.truncated(ord)};
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  auto [x, y] = unify(a, b);
  for (int e = 0; e <= x.order(); ++e) x[e] += y[e];
  return x;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  auto [x, y] = unify(a, b);
  for (int e = 0; e <= x.order(); ++e) x[e] -= y[e];
  return x;
}

QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

QSeries mul(const QSeries& a, const QSeries& b) {
  auto [x, y] = unify(a, b);
  const int n = x.order();
  std::vector<mpz_class> ix, iy;
  const mpz_class lx = integer_scaled(x, ix);
  const mpz_class ly = integer_scaled(y, iy);
  const auto sx = support(ix);
  const auto sy = support(iy);
  std::vector<mpz_class> acc(static_cast<std::size_t>(n) + 1);
  for (int i : sx) {
    for (int j : sy) {
      if (i + j > n) break;
      mpz_addmul(acc[i + j].get_mpz_t(), ix[i].get_mpz_t(), iy[j].get_mpz_t());
    }
  }
  const mpz_class scale = lx * ly;
  std::vector<Rational> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    out[k] = Rational(acc[k], scale);
    out[k].canonicalize();
  }
  return QSeries(x.denom(), std::move(out));
}

QSeries inverse(const QSeries& a) {
  if (sgn(a[0]) == 0) throw DomainError("series inverse needs a nonzero constant term");
  const int n = a.order();
  std::vector<int> sa;
  for (int k = 1; k <= n; ++k)
    if (sgn(a[k]) != 0) sa.push_back(k);
  const Rational inv0 = 1 / a[0];
  QSeries b(a.denom(), n);
  b[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k : sa) {
      if (k > m) break;
      s += a[k] * b[m - k];
    }
    b[m] = -inv0 * s;
  }
  return b;
}

QSeries power(const QSeries& a, int k) {
  if (k < 0) throw DomainError("power exponent must be nonnegative; invert first");
  QSeries result(a.denom(), a.order());
  result[0] = 1;
  QSeries base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

QSeries substitute_power(const QSeries& a, int k) {
  if (k < 1) throw DomainError("substitution power must be positive");
  const int g = std::gcd(a.denom(), k);
  const int d = a.denom() / g;
  const int step = k / g;
  QSeries r(d, a.order() * step);
  for (int e = 0; e <= a.order(); ++e) r[e * step] = a[e];
  return r;
}

QSeries substitute_root(const QSeries& a, int k) {
  if (k < 1) throw DomainError("substitution root must be positive");
  return QSeries(a.denom() * k, a.coeffs());
}

QSeries q_differentiate(const QSeries& a) {
  QSeries r = a;
  for (int e = 0; e <= a.order(); ++e) {
    Rational w(e, a.denom());
    w.canonicalize();
    r[e] *= w;
  }
  return r;
}

int chi3(long long n) {
  const long long r = ((n % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

ResidueCounts theta_b_residue_counts(int order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  ResidueCounts rc;
  rc.same.assign(static_cast<std::size_t>(order) + 1, 0);
  rc.class1 = rc.same;
  rc.class2 = rc.same;
  // x^2 + xy + y^2 >= (x^2 + y^2) / 2
  const int r = isqrt_ceil(2LL * order);
  for (int x = -r; x <= r; ++x) {
    for (int y = -r; y <= r; ++y) {
      const long long m = 1LL * x * x + 1LL * x * y + 1LL * y * y;
      if (m > order) continue;
      switch (((x - y) % 3 + 3) % 3) {
        case 0: ++rc.same[m]; break;
        case 1: ++rc.class1[m]; break;
        default: ++rc.class2[m]; break;
      }
    }
  }
  return rc;
}

QSeries theta_series(Theta kind, int order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  switch (kind) {
    case Theta::a: {
      const auto rc = theta_b_residue_counts(order);
      QSeries s(1, order);
      for (int m = 0; m <= order; ++m) s[m] = rc.same[m] + rc.class1[m] + rc.class2[m];
      return s;
    }
    case Theta::b: {
      // omega + omega^2 = -1 with equal counts in the two nonzero classes.
      const auto rc = theta_b_residue_counts(order);
      QSeries s(1, order);
      for (int m = 0; m <= order; ++m) {
        if (rc.class1[m] != rc.class2[m])
          throw std::logic_error("theta b residue classes unbalanced at norm " + std::to_string(m));
        s[m] = rc.same[m] - rc.class1[m];
      }
      return s;
    }
    case Theta::c: {
      // Exponent (x+1/3)^2 + (x+1/3)(y+1/3) + (y+1/3)^2 = M + 1/3, M = Q(x,y) + x + y.
      QSeries s(3, e_order(order, 3));
      const int r = isqrt_ceil(2LL * order) + 1;
      for (int x = -r; x <= r; ++x) {
        for (int y = -r; y <= r; ++y) {
          const long long m = 1LL * x * x + 1LL * x * y + 1LL * y * y + x + y;
          const long long e = 3 * m + 1;
          if (e <= s.order()) s[static_cast<int>(e)] += 1;
        }
      }
      return s;
    }
  }
  throw std::logic_error("unknown theta kind");
}

namespace {

// prod_{n>=1} (1 - q^n) through q^order (Euler's pentagonal theorem).
QSeries euler_product(int order) {
  QSeries p(1, order);
  p[0] = 1;
  for (long long k = 1;; ++k) {
    const long long e1 = k * (3 * k - 1) / 2;
    const long long e2 = k * (3 * k + 1) / 2;
    if (e1 > order) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    p[static_cast<int>(e1)] += sign;
    if (e2 <= order) p[static_cast<int>(e2)] += sign;
  }
  return p;
}

}  // namespace

QSeries eta_quotient(std::span<const EtaFactor> spec, int order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  long long weight = 0;
  for (const auto& f : spec) {
    if (f.delta < 1) throw DomainError("eta quotient level factor must be positive");
    weight += 1LL * f.delta * f.exponent;
  }
  if (weight % 8 != 0)
    throw DomainError("eta quotient prefactor sum(delta*r)/24 is off the 1/3 grid");
  if (weight < 0) throw DomainError("eta quotient with negative leading exponent");
  // prefactor q^(weight/24) = q^(shift/3)
  const long long shift = weight / 8;
  const int d = shift % 3 == 0 ? 1 : 3;
  const long long shift_e = d == 1 ? shift / 3 : shift;
  const int body_order = order - static_cast<int>(shift / 3);
  if (body_order < 0) return QSeries(d, e_order(order, d));

  QSeries body(1, body_order);
  body[0] = 1;
  for (const auto& f : spec) {
    if (f.exponent == 0) continue;
    QSeries p = substitute_power(euler_product(body_order / f.delta + 1), f.delta).truncated(body_order);
    if (f.exponent < 0) p = inverse(p);
    body = mul(body, power(p, std::abs(f.exponent)));
  }
  QSeries lifted = body.lifted(d);
  QSeries out(d, e_order(order, d));
  for (int e = 0; e <= lifted.order(); ++e) {
    const long long target = e + shift_e;
    if (target <= out.order()) out[static_cast<int>(target)] = lifted[e];
  }
  return out;
}

QSeries lambert_series(Lambert kind, int order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  switch (kind) {
    case Lambert::c: {
      // 3 sum_{r,s} chi(r) (q^(rs/3) - q^(rs))
      QSeries s(3, e_order(order, 3));
      for (long long r = 1; r <= s.order(); ++r) {
        const int ch = chi3(r);
        if (ch == 0) continue;
        for (long long t = 1; r * t <= s.order(); ++t) {
          s[static_cast<int>(r * t)] += 3 * ch;
          if (3 * r * t <= s.order()) s[static_cast<int>(3 * r * t)] -= 3 * ch;
        }
      }
      return s;
    }
    case Lambert::bc3: {
      // 3 sum_{n,k} chi(nk) k q^(nk)
      QSeries s(1, order);
      for (long long n = 1; n <= order; ++n)
        for (long long k = 1; n * k <= order; ++k) s[static_cast<int>(n * k)] += static_cast<long>(3 * chi3(n * k) * k);
      return s;
    }
    case Lambert::c_cubed: {
      // 27 sum_{n,s} chi(n) s^2 q^(ns)
      QSeries s(1, order);
      for (long long n = 1; n <= order; ++n) {
        const int ch = chi3(n);
        if (ch == 0) continue;
        for (long long t = 1; n * t <= order; ++t) s[static_cast<int>(n * t)] += static_cast<long>(27 * ch * t * t);
      }
      return s;
    }
    case Lambert::E0: {
      // sum_{k,r} chi(kr)/k (q^(kr/3) - q^(kr))
      QSeries s(3, e_order(order, 3));
      for (long long k = 1; k <= s.order(); ++k) {
        for (long long r = 1; k * r <= s.order(); ++r) {
          const int ch = chi3(k * r);
          if (ch == 0) continue;
          const Rational w(ch, static_cast<long>(k));
          s[static_cast<int>(k * r)] += w;
          if (3 * k * r <= s.order()) s[static_cast<int>(3 * k * r)] -= w;
        }
      }
      return s;
    }
  }
  throw std::logic_error("unknown Lambert kind");
}

QSeries f_coefficients(int order) {
  if (order < 1) throw DomainError("f coefficients need order >= 1");
  const QSeries b = theta_series(Theta::b, order);
  const QSeries c3 = substitute_power(theta_series(Theta::c, order / 3 + 1), 3).truncated(order);
  QSeries f = mul(mul(b, b), c3);
  f *= Rational(1, 3);
  return f;
}

std::vector<std::int64_t> f_coefficients_int(int order) {
  if (order < 1) throw DomainError("f coefficients need order >= 1");
  const auto n = static_cast<std::size_t>(order);
  // g_m = chi(m) sigma(m)
  std::vector<std::int64_t> g(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d)
    for (std::size_t m = d; m <= n; m += d) g[m] += static_cast<std::int64_t>(d);
  for (std::size_t m = 0; m <= n; ++m) g[m] *= chi3(static_cast<long long>(m));

  // h = g * sum_k (-1)^k (2k+1) q^(k(k+1)/2)
  std::vector<std::int64_t> h(n + 1, 0);
  for (std::size_t k = 0;; ++k) {
    const std::size_t t = k * (k + 1) / 2;
    if (t > n) break;
    const std::int64_t w = (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(2 * k + 1);
    for (std::size_t m = t; m <= n; ++m) h[m] += w * g[m - t];
  }

  // f * prod (1 - q^(3j)) = h
  std::vector<std::pair<std::size_t, std::int64_t>> pent;
  for (long long k = 1;; ++k) {
    bool any = false;
    for (long long j : {k, -k}) {
      const auto e = static_cast<std::size_t>(3 * (j * (3 * j - 1) / 2));
      if (e <= n) {
        pent.emplace_back(e, k % 2 == 0 ? 1 : -1);
        any = true;
      }
    }
    if (!any) break;
  }
  std::sort(pent.begin(), pent.end());
  std::vector<std::int64_t> f(n + 1, 0);
  for (std::size_t m = 0; m <= n; ++m) {
    __int128 s = h[m];
    for (const auto& [e, w] : pent) {
      if (e > m) break;
      s -= static_cast<__int128>(w) * f[m - e];
    }
    f[m] = static_cast<std::int64_t>(s);
  }
  return f;
}

void dump(std::ostream& out, const QSeries& s) {
  const auto v = s.valuation();
  if (!v) return;
  for (int e = *v; e <= s.order(); ++e) {
    const Rational& c = s[e];
    out << e << '/' << s.denom() << '\t' << c.get_num().get_str() << '/' << c.get_den().get_str() << '\n';
  }
}

}  // namespace borwein::qexp
