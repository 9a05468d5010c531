#pragma once

// L(f, n), n = 1, 2, 3, for f = b(q)^2 c(q^3) / 3, and the hypergeometric
// right-hand sides built from the six KdF blocks at (1,1).

#include "borwein/report.hpp"
#include "borwein/result.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace borwein::lvalue {

enum class LMethod { mellin, dirichlet, alpha_integral, rz_intermediate };

const char* to_string(LMethod m);
/// Throws UsageError on an unknown name.
LMethod parse_method(const std::string& name);

/// (2 pi)^n / (3 (n-1)!) * int_0^inf b^2(e^{-2 pi u}) c(e^{-6 pi u}) u^{n-1} du,
/// split at split_scale / sqrt(3).
SeriesResult l_mellin(int n, const Precision& prec, double split_scale = 1.0);

/// sum_{k <= N} a_k / k^3 (N >= 1000) plus an extrapolated tail. The partial
/// sums S(M), N/2 <= M <= N, are fitted to S + g_{M mod 3} / M; err_estimate
/// is the spread against fits on [3N/4, N] and [N/4, N/2] (heuristic).
struct DirichletSum {
  SeriesResult result;
  Real partial_sum;
  Real tail;
};
DirichletSum dirichlet_sum(long N);
SeriesResult l_dirichlet(long N);

/// Integral in alpha = c^3/a^3 with closed-form integrand (no theta values).
SeriesResult l_alpha_integral(int n, const Precision& prec);

/// Integral over q of theta polynomials: b^2(a-b)/9, 2pi/(27 sqrt3) b(a-b)^2,
/// 2pi^2/27 b^3 E0, each against dq/q.
SeriesResult l_rz_intermediate(int n, const Precision& prec);

/// Dispatch; dirichlet only for n = 3 (UsageError otherwise).
SeriesResult l_value(int n, LMethod method, const Precision& prec, long N = 1000000);

enum class Route { series, integral };

const char* to_string(Route r);
Route parse_route(const std::string& name);

/// Tolerance asked of the accelerated boundary series (looser target tolerances win).
inline constexpr int kSeriesRouteDigits = 12;

/// Combination of KdF blocks at (1,1):
///   n=1: K1/27
///   n=2: 4 pi/(81 sqrt3) (K2 - K1)
///   n=3: 2 pi^2/27 (K3a - K3b/4 + K3c/27 - 2 K3d/27)
SeriesResult rhs_theorem(int n, Route route, const Precision& prec);

/// E0(q) = sum_{k,r} chi(kr)/k (q^{kr/3} - q^{kr}), truncated with a tail bound.
SeriesResult e0_lambert(const Real& q, const Precision& prec);

/// The same function through alpha:
///   alpha^{1/3}/3 2F1[1/3,1;4/3;alpha] - alpha^{2/3}/6 2F1[2/3,1;5/3;alpha]
///   + alpha/27 3F2[1,1,4/3;2,2;alpha] - 2 alpha/27 3F2[1,1,5/3;2,2;alpha].
SeriesResult e0_hypergeometric(const Real& alpha, const Real& one_minus_alpha, const Precision& prec);

// Catalog of intermediate identities. Each check evaluates both sides with
// target tolerance tol/100 (never tighter than prec) and passes when they
// agree to tol.

const std::vector<std::string>& catalog();

/// Whole default sweep for `name`; the report carries the worst point.
IdentityReport check_identity(const std::string& name, const Precision& prec, const Real& tol);

/// Single point: alpha for int1/int2/int3, q for lemma_E0, z for hginterep
/// (both parameter sets), x for geom (all three exponents).
IdentityReport check_identity_at(const std::string& name, const Real& point, const Precision& prec, const Real& tol);

/// a x 2F1[1, a+1; 2; x] against (1-x)^{-a} - 1.
IdentityReport check_geom(const Rational& a, const Real& x, const Precision& prec, const Real& tol);

}  // namespace borwein::lvalue
