#pragma once

// Verification suites: exact q-series identities, numeric checks of the
// theta / hypergeometric apparatus, and the three L-value formulas.

#include "borwein/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace borwein::suite {

enum class Suite { all, exact, numeric, theorem };

const char* to_string(Suite s);
/// Throws UsageError on an unknown name.
Suite parse_suite(const std::string& name);

inline constexpr int kDefaultOrder = 500;
/// Default tolerance of the L-value checks.
inline const char* const kTheoremTol = "1e-10";

/// Coefficientwise residuals through q^order; a report passes when the
/// residual vanishes and is known through q^order. lhs counts the nonzero
/// residual coefficients, tol is 0.
std::vector<IdentityReport> exact_checks(int order);

/// Hauptmodul, involution, cubic and differential relations at sample
/// points, the identity catalog, KdF series/integral agreement at (1/2,1/2),
/// and at (1,1) for the three L-value combinations (accelerated series within
/// its error estimate, which must be <= 1e-8).
std::vector<IdentityReport> numeric_checks(const Precision& prec);

/// L(f,n), n = 1, 2, 3, by the Mellin integral against the KdF combination
/// (integral route) at tolerance tol.
std::vector<IdentityReport> theorem_checks(const Precision& prec, const Real& tol);

struct Options {
  Suite suite = Suite::all;
  int order = kDefaultOrder;
  int digits = 40;
  std::optional<Real> tol;  // theorem tolerance
};

using Progress = std::function<void(const IdentityReport&)>;

/// Runs the selected checks in registry order; exceptions become failed
/// reports with a note.
SuiteReport run(const Options& opt, const Progress& progress = {});

}  // namespace borwein::suite
