#include "borwein/accel.hpp"
#include "borwein/hyper.hpp"
#include "borwein/quad.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace borwein::hyper {

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative index");
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= a + k;
  return r;
}

Real pochhammer(const Real& a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative index");
  Real r = 1;
  for (int k = 0; k < n; ++k) r *= a + k;
  return r;
}

namespace {

constexpr long kMaxDirectTerms = 2000000;

std::vector<Real> reals(const std::vector<Rational>& v) {
  std::vector<Real> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_real(x));
  return out;
}

Rational sum_of(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

// Index at which the series terminates, if some upper parameter is a nonpositive integer.
std::optional<long> terminating_index(const std::vector<Rational>& up) {
  std::optional<long> end;
  for (const auto& a : up) {
    if (is_nonpositive_integer(a)) {
      const long k = -a.get_num().get_si();
      if (!end || k < *end) end = k;
    }
  }
  return end;
}

struct Partial {
  Real value;
  Real err;
  long terms = 0;
  bool certified = false;
};

// Plain summation; the tail after T_n is bounded by |T_n| rho / (1 - rho) with
// rho the supremum of the term ratio from n on (valid once n is past every
// parameter sign change).
Partial sum_direct(const std::vector<Real>& up, const std::vector<Real>& lo, const Real& z, const Real& tol,
                   std::optional<long> poly_end, long max_terms = kMaxDirectTerms) {
  const std::size_t p = up.size(), q = lo.size();
  long n_star = 0;
  for (const auto* list : {&up, &lo})
    for (const auto& x : *list)
      if (x < 0) n_star = std::max(n_star, static_cast<long>(ceil(-x).convert_to<double>()) + 1);
  const Real az = abs(z);
  Partial out;
  Real s = 0, t = 1;
  for (long n = 0;; ++n) {
    s += t;
    if (poly_end && n == *poly_end) {
      out = {s, Real(0), n + 1, true};
      return out;
    }
    const Real tol_eff = tol * max(Real(1), abs(s));
    if (n >= n_star && !poly_end && abs(t) <= tol_eff) {
      Real rho = az;
      const std::size_t np = std::min(p, q);
      for (std::size_t i = 0; i < np; ++i) rho *= max(Real(1), abs(up[i] + n) / abs(lo[i] + n));
      if (p > q) {
        rho *= max(Real(1), abs(up[q] + n) / (n + 1));
      } else {
        for (std::size_t j = p; j < q; ++j) rho /= abs(lo[j] + n);
        rho /= n + 1;
      }
      if (rho < 1) {
        const Real tail = abs(t) * rho / (1 - rho);
        if (tail <= tol_eff) {
          out = {s, tail, n + 1, true};
          return out;
        }
      }
    }
    if (n + 1 >= max_terms) {
      out = {s, abs(t), n + 1, false};
      return out;
    }
    Real r = z / (n + 1);
    for (const auto& a : up) r *= a + n;
    for (const auto& b : lo) r /= b + n;
    t *= r;
    if (t == 0 && !poly_end && n + 1 > n_star) {
      out = {s, Real(0), n + 1, true};
      return out;
    }
  }
}

// sum_n (a)_n (b)_n / (n! (n+m)!) w^n [log w - psi(n+1) - psi(n+m+1) + psi(a+n) + psi(b+n)]
// with a, b already shifted by m.
Partial sum_log_series(const Real& a, const Real& b, long m, const Real& w, const Real& tol) {
  const Real lw = log(w);
  Real c = 1;
  for (long k = 2; k <= m; ++k) c /= k;
  Real psi1 = digamma(Real(1));
  Real psim = digamma(Real(m + 1));
  Real psia = digamma(a);
  Real psib = digamma(b);
  long n_star = 0;
  for (const Real* x : {&a, &b})
    if (*x < 0) n_star = std::max(n_star, static_cast<long>(ceil(-*x).convert_to<double>()) + 1);
  Real s = 0;
  Real wn = 1;
  for (long n = 0;; ++n) {
    const Real bracket = lw - psi1 - psim + psia + psib;
    const Real t = c * wn * bracket;
    s += t;
    const Real tol_eff = tol * max(Real(1), abs(s));
    if (n >= n_star && abs(t) <= tol_eff) {
      Real rho = w * max(Real(1), abs(a + n) / (n + 1)) * max(Real(1), abs(b + n) / (n + m + 1));
      rho *= Real(n + 2) / (n + 1);  // slow growth of the bracket
      if (rho < 1) {
        const Real tail = 2 * abs(t) * rho / (1 - rho) + abs(c * wn) * tol;
        if (tail <= tol_eff) return {s, tail, n + 1, true};
      }
    }
    if (n + 1 >= kMaxDirectTerms) return {s, abs(t), n + 1, false};
    c = c * (a + n) * (b + n) / ((n + 1) * (n + m + 1));
    wn *= w;
    psi1 += Real(1) / (n + 1);
    psim += Real(1) / (n + m + 1);
    psia += 1 / (a + n);
    psib += 1 / (b + n);
  }
}

Real clamp_tol(const Real& tol, int digits) { return max(tol, pow10(-(digits - 8))); }

}  // namespace

// ---------------------------------------------------------------------------

struct Pfq::Impl {
  enum class Kind { polynomial, entire, one_f_zero, two_f_one, reducible, general };

  PFQParams params;
  Precision prec;
  std::vector<Real> up, lo;
  Kind kind = Kind::general;
  std::optional<long> poly_end;
  Rational excess;  // sum lower - sum upper (p = q+1)

  // 2F1 connection data, F(z) = w^euler_power * G(z) with G of excess M >= 0.
  Rational A, B, C, M, euler_power;
  bool log_case = false;
  std::optional<long> transformed_poly_end;
  std::vector<Real> tup, tlo;  // transformed parameters for direct use
  Real g1, g2;                 // non-integer M
  std::vector<Real> s1_up, s1_lo, s2_up, s2_lo;
  Real h1, h2;                 // integer M
  std::vector<Real> fin;       // finite-sum coefficients for integer M
  Real gauss;                  // value at z = 1 when c - a - b > 0

  // Euler reduction for p >= 3
  std::unique_ptr<Impl> reduced;
  Real red_u, red_l, red_norm;

  Impl(const PFQParams& p, const Precision& pr) : params(p), prec(pr) {
    ScopedDigits guard(prec);
    for (const auto& b : params.lower)
      if (is_nonpositive_integer(b)) throw DomainError("pFq lower parameter is a nonpositive integer");
    up = reals(params.upper);
    lo = reals(params.lower);
    poly_end = terminating_index(params.upper);
    const std::size_t np = params.upper.size(), nq = params.lower.size();
    if (poly_end) {
      kind = Kind::polynomial;
    } else if (np <= nq) {
      kind = Kind::entire;
    } else if (np > nq + 1) {
      kind = Kind::general;  // divergent for every x != 0
    } else {
      excess = sum_of(params.lower) - sum_of(params.upper);
      if (np == 1) {
        kind = Kind::one_f_zero;
      } else if (np == 2) {
        kind = Kind::two_f_one;
        setup_two_f_one();
      } else {
        setup_reduction();
      }
    }
  }

  void setup_two_f_one() {
    const Rational a = params.upper[0], b = params.upper[1], c = params.lower[0];
    const Rational m = c - a - b;
    if (m > 0) gauss = gamma(to_real(c)) * gamma(to_real(m)) * recip_gamma(to_real(c - a)) * recip_gamma(to_real(c - b));
    if (m < 0) {
      A = c - a;
      B = c - b;
      euler_power = m;
    } else {
      A = a;
      B = b;
      euler_power = 0;
    }
    C = c;
    M = C - A - B;
    transformed_poly_end = terminating_index({A, B});
    tup = reals({A, B});
    tlo = reals({C});
    if (transformed_poly_end) return;
    const Real Ar = to_real(A), Br = to_real(B), Cr = to_real(C), Mr = to_real(M);
    if (is_integer(M)) {
      log_case = true;
      const long mi = M.get_num().get_si();
      h2 = gamma(Ar + Br + Mr) * recip_gamma(Ar) * recip_gamma(Br);
      if (mi % 2) h2 = -h2;
      if (mi > 0) {
        h1 = gamma(Mr) * gamma(Ar + Br + Mr) * recip_gamma(Ar + Mr) * recip_gamma(Br + Mr);
        Real coef = 1;
        for (long n = 0; n < mi; ++n) {
          fin.push_back(coef);
          coef = coef * (Ar + n) * (Br + n) / ((n + 1) * (1 - Mr + n));
        }
      }
      s1_up = {Ar + Mr, Br + Mr};
    } else {
      g1 = gamma(Cr) * gamma(Mr) * recip_gamma(Cr - Ar) * recip_gamma(Cr - Br);
      g2 = gamma(Cr) * gamma(-Mr) * recip_gamma(Ar) * recip_gamma(Br);
      s1_up = {Ar, Br};
      s1_lo = {1 - Mr};
      s2_up = {Cr - Ar, Cr - Br};
      s2_lo = {Mr + 1};
    }
  }

  void setup_reduction() {
    kind = Kind::general;
    // Pair an upper u with a lower l > u > 0, preferring the most regular weight.
    int best_i = -1, best_j = -1;
    Rational best_score = -1;
    for (std::size_t i = 0; i < params.upper.size(); ++i) {
      for (std::size_t j = 0; j < params.lower.size(); ++j) {
        const Rational& u = params.upper[i];
        const Rational& l = params.lower[j];
        if (u > 0 && l > u) {
          const Rational score = std::min(u, Rational(l - u));
          if (score > best_score) {
            best_score = score;
            best_i = static_cast<int>(i);
            best_j = static_cast<int>(j);
          }
        }
      }
    }
    if (best_i < 0) return;
    kind = Kind::reducible;
    PFQParams rest = params;
    red_u = to_real(rest.upper[static_cast<std::size_t>(best_i)]);
    red_l = to_real(rest.lower[static_cast<std::size_t>(best_j)]);
    rest.upper.erase(rest.upper.begin() + best_i);
    rest.lower.erase(rest.lower.begin() + best_j);
    red_norm = beta_normalizer(red_u, red_l);
    reduced = std::make_unique<Impl>(rest, prec);
  }

  SeriesResult direct(const Real& x, const Real& tol, Method method = Method::direct) const {
    const auto d = sum_direct(up, lo, x, tol, poly_end);
    if (!d.certified)
      throw PrecisionError("pFq direct summation did not converge within " + std::to_string(d.terms) + " terms");
    return {d.value, d.err, d.terms, method};
  }

  SeriesResult connection(const Real& x, const Real& w, const Real& tol) const {
    const Real lw = log(w);
    SeriesResult r;
    r.method = Method::direct;
    if (transformed_poly_end) {
      const auto d = sum_direct(tup, tlo, x, tol, transformed_poly_end);
      r.value = d.value;
      r.err_estimate = d.err;
      r.terms_used = d.terms;
    } else if (log_case) {
      const long mi = M.get_num().get_si();
      Real finite = 0, wn = 1;
      for (long n = 0; n < mi; ++n) {
        finite += fin[static_cast<std::size_t>(n)] * wn;
        wn *= w;
      }
      const Real wm = exp(to_real(M) * lw);
      const Real scale = max(Real(1), abs(h2 * wm));
      const auto ls = sum_log_series(s1_up[0], s1_up[1], mi, w, tol / scale);
      if (!ls.certified) throw PrecisionError("2F1 logarithmic connection series did not converge");
      r.value = (mi > 0 ? h1 * finite : Real(0)) - h2 * wm * ls.value;
      r.err_estimate = abs(h2 * wm) * ls.err;
      r.terms_used = ls.terms + mi;
    } else {
      const Real wm = exp(to_real(M) * lw);
      const Real t1 = tol / max(Real(1), abs(g1));
      const Real t2 = tol / max(Real(1), abs(g2 * wm));
      const auto p1 = sum_direct(s1_up, s1_lo, w, t1, std::nullopt);
      const auto p2 = sum_direct(s2_up, s2_lo, w, t2, std::nullopt);
      if (!p1.certified || !p2.certified) throw PrecisionError("2F1 connection series did not converge");
      r.value = g1 * p1.value + g2 * wm * p2.value;
      r.err_estimate = abs(g1) * p1.err + abs(g2 * wm) * p2.err;
      r.terms_used = p1.terms + p2.terms;
    }
    if (euler_power != 0) {
      const Real f = exp(to_real(euler_power) * lw);
      r.value *= f;
      r.err_estimate *= f;
    }
    return r;
  }

  SeriesResult reduce(const Real& x, const Real& omx, const Real& tol) const {
    const Real inner_tol = clamp_tol(tol / 10, prec.working_digits);
    long inner_terms = 0;
    const auto integrand = [&](const Real& s, const Real& oms) -> Real {
      const Real xs = x * s;
      const Real om = omx + x * oms;
      const auto v = reduced->eval(xs, om, inner_tol);
      inner_terms += v.terms_used;
      return pow(s, red_u - 1) * pow(oms, red_l - red_u - 1) * v.value;
    };
    const Real scale = max(Real(1), red_norm);
    const auto q = quad::quad_de(integrand, clamp_tol(tol / (2 * scale), prec.working_digits), prec);
    SeriesResult r;
    r.value = red_norm * q.value;
    r.err_estimate = red_norm * q.err_estimate + inner_tol * max(Real(1), abs(r.value));
    r.terms_used = q.terms_used + inner_terms;
    r.method = Method::integral;
    return r;
  }

  SeriesResult accelerate_at_one(const Real& tol) const {
    std::vector<Real> partial;
    const long n_max = 4000;
    partial.reserve(static_cast<std::size_t>(n_max) + 1);
    Real s = 0, t = 1;
    for (long n = 0; n <= n_max; ++n) {
      s += t;
      partial.push_back(s);
      Real r = Real(1) / (n + 1);
      for (const auto& a : up) r *= a + n;
      for (const auto& b : lo) r /= b + n;
      t *= r;
    }
    auto best = accel::levin_u_tail(partial, 20);
    if (best.err > tol * max(Real(1), abs(best.value))) {
      const std::vector<accel::Family> fam{{excess, 0}};
      const auto rich = accel::richardson(partial, fam, 12);
      if (rich.err < best.err) best = rich;
    }
    if (best.err > tol * max(Real(1), abs(best.value)))
      throw PrecisionError("pFq at x = 1: acceleration reached only " + to_decimal(best.err, 3));
    return {best.value, best.err, n_max + 1, Method::accelerated};
  }

  SeriesResult eval(const Real& x, const Real& omx, const Real& tol_in) const {
    const Real tol = clamp_tol(tol_in, prec.working_digits);
    if (x == 0) return {Real(1), Real(0), 1, Method::direct};
    switch (kind) {
      case Kind::polynomial: return direct(x, tol);
      case Kind::entire: return direct(x, tol);
      default: break;
    }
    if (params.upper.size() > params.lower.size() + 1)
      throw DomainError("pFq with p > q + 1 diverges for x != 0");
    if (abs(x) > 1) throw DomainError("pFq with p = q + 1 needs |x| <= 1");
    const bool at_one = omx == 0;
    if (at_one && excess <= 0) throw DomainError("pFq at x = 1 needs sum(lower) - sum(upper) > 0");
    if (kind == Kind::one_f_zero) {
      if (at_one) return {Real(0), Real(0), 1, Method::direct};
      return {exp(-up[0] * log(omx)), Real(0), 1, Method::direct};
    }
    if (kind == Kind::two_f_one) {
      if (at_one) return {gauss, Real(0), 1, Method::direct};
      if (x > Real(7) / 10) return connection(x, omx, tol);
      if (x < Real(-7) / 10) {
        // Pfaff: F(a,b;c;x) = (1-x)^-a F(a, c-b; c; x/(x-1)).
        const std::vector<Real> pu{up[0], lo[0] - up[1]};
        const auto d = sum_direct(pu, lo, x / (x - 1), tol, terminating_index({params.upper[0], params.lower[0] - params.upper[1]}));
        if (!d.certified) throw PrecisionError("2F1 Pfaff series did not converge");
        const Real f = exp(-up[0] * log(omx));
        return {f * d.value, f * d.err, d.terms, Method::direct};
      }
      return direct(x, tol);
    }
    if (x > Real(7) / 10 || at_one) {
      if (kind == Kind::reducible) return reduce(x, omx, tol);
      if (at_one) return accelerate_at_one(tol);
    }
    if (x == -1) {
      std::vector<Real> partial;
      Real s = 0, t = 1;
      for (long n = 0; n <= 200; ++n) {
        s += t;
        partial.push_back(s);
        Real r = Real(-1) / (n + 1);
        for (const auto& a : up) r *= a + n;
        for (const auto& b : lo) r /= b + n;
        t *= r;
      }
      const auto e = accel::levin_u_tail(partial, 30);
      if (e.err > tol * max(Real(1), abs(e.value))) throw PrecisionError("pFq at x = -1: Levin transform unstable");
      return {e.value, e.err, 201, Method::accelerated};
    }
    return direct(x, tol);
  }
};

Pfq::Pfq(const PFQParams& params, const Precision& prec) : impl_(std::make_shared<const Impl>(params, prec)) {}

SeriesResult Pfq::operator()(const Real& x, const Real& one_minus_x, const Real& tol) const {
  ScopedDigits guard(impl_->prec);
  return impl_->eval(at_precision(x, impl_->prec.working_digits), at_precision(one_minus_x, impl_->prec.working_digits),
                     tol);
}

SeriesResult Pfq::operator()(const Real& x, const Real& one_minus_x) const {
  return (*this)(x, one_minus_x, impl_->prec.target_tol);
}

SeriesResult pfq(const PFQParams& params, const Real& x, const Real& one_minus_x, const Precision& prec) {
  return Pfq(params, prec)(x, one_minus_x);
}

SeriesResult pfq(const PFQParams& params, const Real& x, const Precision& prec) {
  ScopedDigits guard(prec);
  const Real xr = at_precision(x, prec.working_digits);
  return pfq(params, xr, 1 - xr, prec);
}

}  // namespace borwein::hyper
