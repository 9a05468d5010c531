#include "borwein/accel.hpp"
#include "borwein/hyper.hpp"
#include "borwein/quad.hpp"

#include <algorithm>
#include <map>

namespace borwein::hyper {

namespace {

Rational sum_of(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

void check_primed(const KdFParams& p) {
  for (const auto* list : {&p.ap, &p.bp, &p.cp})
    for (const auto& x : *list)
      if (is_nonpositive_integer(x)) throw DomainError("KdF lower parameter is a nonpositive integer");
}

bool frac_equal(const Rational& x, const Rational& y) { return is_integer(x - y); }

// Remainder families x^-(e + j) log^k x of the anti-diagonal partial sums at (1,1).
// The bulk family m3 carries one log power per edge margin congruent to it
// mod 1; families congruent mod 1 merge into one starting at the smaller exponent.
std::vector<accel::Family> corner_families(const ConvergenceMargins& mg) {
  struct Member {
    Rational e;
    int logs;
  };
  std::vector<Member> members;
  members.push_back({mg.m1, 0});
  members.push_back({mg.m2, 0});
  members.push_back({mg.m3, (frac_equal(mg.m3, mg.m1) ? 1 : 0) + (frac_equal(mg.m3, mg.m2) ? 1 : 0)});
  std::vector<accel::Family> out;
  std::vector<bool> used(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (used[i]) continue;
    accel::Family f{members[i].e, members[i].logs};
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!used[j] && frac_equal(members[i].e, members[j].e)) {
        used[j] = true;
        f.exponent = std::min(f.exponent, members[j].e);
        f.log_power = std::max(f.log_power, members[j].logs);
      }
    }
    out.push_back(f);
  }
  return out;
}

// Per-variable coefficient sequence (b)_m / ((b')_m m!) x^m, grown on demand.
class Coeffs {
 public:
  Coeffs(std::vector<Real> up, std::vector<Real> lo, Real x) : up_(std::move(up)), lo_(std::move(lo)), x_(std::move(x)) {
    v_.push_back(Real(1));
  }
  const Real& at(std::size_t m) {
    while (v_.size() <= m) {
      const long n = static_cast<long>(v_.size()) - 1;
      Real r = x_ / (n + 1);
      for (const auto& a : up_) r *= a + n;
      for (const auto& b : lo_) r /= b + n;
      v_.push_back(v_.back() * r);
    }
    return v_[m];
  }

 private:
  std::vector<Real> up_, lo_;
  Real x_;
  std::vector<Real> v_;
};

std::vector<Real> reals(const std::vector<Rational>& v) {
  std::vector<Real> out;
  for (const auto& x : v) out.push_back(to_real(x));
  return out;
}

struct Diagonals {
  std::vector<Real> joint_up, joint_lo;
  Coeffs bx, cy;
  Real joint = 1;
  long d = -1;

  Diagonals(const KdFParams& p, const Real& x, const Real& y)
      : joint_up(reals(p.a)), joint_lo(reals(p.ap)), bx(reals(p.b), reals(p.bp), x), cy(reals(p.c), reals(p.cp), y) {}

  // Sum and absolute sum of the next anti-diagonal.
  std::pair<Real, Real> next() {
    ++d;
    if (d > 0) {
      const long k = d - 1;
      for (const auto& a : joint_up) joint *= a + k;
      for (const auto& b : joint_lo) joint /= b + k;
    }
    Real s = 0, as = 0;
    for (long m = 0; m <= d; ++m) {
      const Real t = bx.at(static_cast<std::size_t>(m)) * cy.at(static_cast<std::size_t>(d - m));
      s += t;
      as += abs(t);
    }
    return {joint * s, abs(joint) * as};
  }
};

long sign_change_index(const KdFParams& p) {
  long n = 0;
  for (const auto* list : {&p.a, &p.ap, &p.b, &p.bp, &p.c, &p.cp})
    for (const auto& x : *list)
      if (x < 0) n = std::max(n, static_cast<long>(-x.get_d()) + 2);
  return n;
}

SeriesResult interior_series(const KdFParams& p, const Real& x, const Real& y, const Precision& prec) {
  Diagonals diag(p, x, y);
  const long n_star = sign_change_index(p);
  Real s = 0;
  Real prev_abs = -1, prev_ratio = 0;
  const long d_max = 200000;
  for (long d = 0; d <= d_max; ++d) {
    const auto [v, av] = diag.next();
    s += v;
    const Real tol_eff = prec.target_tol * max(Real(1), abs(s));
    if (d > n_star && prev_abs >= 0) {
      if (av == 0 && prev_abs == 0) return {s, Real(0), (d + 1) * (d + 2) / 2, Method::direct};
      const Real ratio = prev_abs > 0 ? av / prev_abs : Real(1);
      const Real rho = max(ratio, prev_ratio);
      if (rho < 1 && av * rho / (1 - rho) <= tol_eff)
        return {s, av * rho / (1 - rho), (d + 1) * (d + 2) / 2, Method::direct};
      prev_ratio = ratio;
    }
    prev_abs = av;
  }
  throw PrecisionError("KdF series did not converge within 200000 diagonals");
}

SeriesResult boundary_series(const KdFParams& p, const Real& x, const Real& y, const Precision& prec) {
  const auto mg = kdf_margins(p);
  const bool x_edge = abs(x) == 1, y_edge = abs(y) == 1;
  std::vector<accel::Family> families;
  if (x == 1 && y == 1) {
    families = corner_families(mg);
  } else if (x == 1 && !y_edge) {
    families = {{mg.m1, 0}};
  } else if (y == 1 && !x_edge) {
    families = {{mg.m2, 0}};
  }
  const Real tol = prec.target_tol;
  // Extra digits absorb the conditioning of the extrapolation systems.
  ScopedDigits guard(prec.working_digits + 25);
  const Real xs = at_precision(x, prec.working_digits + 25);
  const Real ys = at_precision(y, prec.working_digits + 25);
  Diagonals diag(p, xs, ys);
  std::vector<Real> partial;
  Real s = 0;
  accel::Estimate best{Real(0), Real(-1)};
  Method method = Method::accelerated;
  for (const std::size_t d_max : {600UL, 1200UL, 2400UL}) {
    while (partial.size() <= d_max) {
      s += diag.next().first;
      partial.push_back(s);
    }
    auto est = accel::levin_u_tail(partial, 12);
    if (!families.empty()) {
      const auto rich = accel::richardson(partial, families, 14);
      if (rich.err < est.err) est = rich;
    }
    if (best.err < 0 || est.err < best.err) best = est;
    if (best.err <= tol * max(Real(1), abs(best.value))) {
      const long terms = static_cast<long>((d_max + 1) * (d_max + 2) / 2);
      ScopedDigits back(prec);
      return {at_precision(best.value, prec.working_digits), at_precision(best.err, prec.working_digits), terms, method};
    }
  }
  throw PrecisionError("KdF boundary acceleration failed to stabilize: best estimate " + to_decimal(best.value, 20) +
                       " with spread " + to_decimal(best.err, 3) + ", requested " + to_decimal(tol, 3));
}

}  // namespace

ConvergenceMargins kdf_margins(const KdFParams& p) {
  ConvergenceMargins m;
  const Rational base = sum_of(p.ap) - sum_of(p.a);
  m.m1 = base + sum_of(p.bp) - sum_of(p.b);
  m.m2 = base + sum_of(p.cp) - sum_of(p.c);
  m.m3 = base + sum_of(p.bp) + sum_of(p.cp) - sum_of(p.b) - sum_of(p.c);
  m.boundary_ok = m.m1 > 0 && m.m2 > 0 && m.m3 > 0;
  return m;
}

bool boundary_shape_supported(const KdFParams& p) {
  return p.a.size() == p.ap.size() && p.b.size() == p.bp.size() + 1 && p.c.size() == p.cp.size() + 1;
}

PFQParams x_slice(const KdFParams& p) {
  PFQParams out;
  out.upper = p.a;
  out.upper.insert(out.upper.end(), p.b.begin(), p.b.end());
  out.lower = p.ap;
  out.lower.insert(out.lower.end(), p.bp.begin(), p.bp.end());
  return out;
}

KdFParams swapped(const KdFParams& p) { return {p.a, p.ap, p.c, p.cp, p.b, p.bp}; }

SeriesResult kdf_series(const KdFParams& p, const Real& x_in, const Real& y_in, const Precision& prec) {
  ScopedDigits guard(prec);
  check_primed(p);
  const Real x = at_precision(x_in, prec.working_digits);
  const Real y = at_precision(y_in, prec.working_digits);
  if (abs(x) > 1 || abs(y) > 1) throw DomainError("KdF series needs |x| <= 1 and |y| <= 1");
  if (abs(x) < 1 && abs(y) < 1) return interior_series(p, x, y, prec);
  if (!boundary_shape_supported(p))
    throw DomainError("unsupported shape: boundary evaluation needs F^{A;B+1;C+1}_{A;B;C}");
  const auto mg = kdf_margins(p);
  if (!mg.boundary_ok)
    throw DomainError("boundary point requested but the convergence margins are not all positive");
  return boundary_series(p, x, y, prec);
}

SeriesResult kdf_integral(const KdFParams& p, const Real& x_in, const Real& y_in, const Precision& prec) {
  ScopedDigits guard(prec);
  check_primed(p);
  if (p.a.size() != 1 || p.ap.size() != 1) throw DomainError("KdF integral needs one joint upper and one joint lower parameter");
  if (!(p.a[0] > 0) || !(p.ap[0] > p.a[0])) throw DomainError("KdF integral needs a' > a > 0");
  if (p.b.size() != p.bp.size() + 1 || p.c.size() != p.cp.size() + 1)
    throw DomainError("KdF integral needs B+1 over B and C+1 over C parameters");
  const Real x = at_precision(x_in, prec.working_digits);
  const Real y = at_precision(y_in, prec.working_digits);
  if (abs(x) > 1 || abs(y) > 1) throw DomainError("KdF integral needs |x| <= 1 and |y| <= 1");
  const Real a = to_real(p.a[0]), ap = to_real(p.ap[0]);
  const Real norm = beta_normalizer(a, ap);
  const Pfq fb(PFQParams{p.b, p.bp}, prec);
  const Pfq fc(PFQParams{p.c, p.cp}, prec);
  const Real tol = prec.target_tol;
  const Real inner_tol = tol / 10;
  const Real omx = 1 - x, omy = 1 - y;
  long inner_terms = 0;
  const auto integrand = [&](const Real& t, const Real& omt) -> Real {
    const auto vb = fb(x * t, omx + x * omt, inner_tol);
    const auto vc = fc(y * t, omy + y * omt, inner_tol);
    inner_terms += vb.terms_used + vc.terms_used;
    return pow(t, a - 1) * pow(omt, ap - a - 1) * vb.value * vc.value;
  };
  const auto q = quad::quad_de(integrand, tol / (2 * max(Real(1), norm)), prec);
  SeriesResult r;
  r.value = norm * q.value;
  r.err_estimate = norm * q.err_estimate + 2 * inner_tol * max(Real(1), abs(r.value));
  r.terms_used = q.terms_used + inner_terms;
  r.method = Method::integral;
  return r;
}

IdentityReport check_hginterep(const PFQParams& params, const Real& z_in, const Precision& prec, const Real& tol) {
  const double t0 = now_seconds();
  const Precision work = prec.with_tol(tol / 100);
  ScopedDigits guard(work);
  if (params.upper.empty() || params.lower.empty()) throw DomainError("hginterep needs at least one upper and one lower parameter");
  const Rational& a1 = params.upper[0];
  const Rational& a1p = params.lower[0];
  if (!(a1 > 0) || !(a1p > a1)) throw DomainError("hginterep needs a1' > a1 > 0");
  const Real z = at_precision(z_in, work.working_digits);
  if (abs(z) > 1) throw DomainError("hginterep needs |z| <= 1");
  const Real a = to_real(a1), ap = to_real(a1p);
  const Real beta = 1 / beta_normalizer(a, ap);
  const Real lhs = beta * pfq(params, z, 1 - z, work).value;
  PFQParams rest = params;
  rest.upper.erase(rest.upper.begin());
  rest.lower.erase(rest.lower.begin());
  const Pfq inner(rest, work);
  const Real omz = 1 - z;
  const auto integrand = [&](const Real& t, const Real& omt) -> Real {
    return pow(t, a - 1) * pow(omt, ap - a - 1) * inner(z * t, omz + z * omt).value;
  };
  const Real rhs = quad::quad_de(integrand, work.target_tol, work).value;
  return make_report("hginterep", lhs, rhs, tol, {"pfq", "quad_de"}, now_seconds() - t0);
}

KdFParams theorem_block(const std::string& name) {
  const Rational third(1, 3), two_thirds(2, 3), four_thirds(4, 3), five_thirds(5, 3);
  const std::vector<Rational> c{third, two_thirds}, cp{Rational(1)};
  static const std::map<std::string, int> index{{"K1", 0}, {"K2", 1}, {"K3a", 2}, {"K3b", 3}, {"K3c", 4}, {"K3d", 5}};
  const auto it = index.find(name);
  if (it == index.end()) throw DomainError("unknown parameter block " + name);
  switch (it->second) {
    case 0: return {{1}, {2}, {1, four_thirds}, {2}, c, cp};
    case 1: return {{1}, {2}, {1, five_thirds}, {2}, c, cp};
    case 2: return {{third}, {four_thirds}, {third, 1}, {four_thirds}, c, cp};
    case 3: return {{two_thirds}, {five_thirds}, {two_thirds, 1}, {five_thirds}, c, cp};
    case 4: return {{1}, {2}, {1, 1, four_thirds}, {2, 2}, c, cp};
    default: return {{1}, {2}, {1, 1, five_thirds}, {2, 2}, c, cp};
  }
}

const std::vector<std::string>& theorem_block_names() {
  static const std::vector<std::string> names{"K1", "K2", "K3a", "K3b", "K3c", "K3d"};
  return names;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') t += ch;
  if (t.empty()) throw DomainError("empty rational");
  const auto slash = t.find('/');
  const auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_not_of("+-0") == std::string::npos)
    throw DomainError("not a rational number: '" + text + "'");
  Rational r(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den[0] == '+' ? den.substr(1) : den));
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace borwein::hyper
