#pragma once

#include "borwein/real.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace borwein {

struct IdentityReport {
  std::string name;
  Real lhs, rhs;
  Real abs_err;
  Real tol;
  bool pass = false;
  std::pair<std::string, std::string> methods;
  double seconds = 0;
  std::string note;  // set when the check could not be evaluated
};

/// Fills abs_err = |lhs - rhs| and pass = abs_err <= tol.
IdentityReport make_report(std::string name, const Real& lhs, const Real& rhs, const Real& tol,
                           std::pair<std::string, std::string> methods, double seconds = 0);

struct SuiteReport {
  std::string tool_version;
  int digits = 40;
  std::vector<IdentityReport> checks;
  bool all_pass = true;
  double total_seconds = 0;
};

/// Reals are written as decimal strings with `digits` significant digits,
/// seconds with microsecond resolution.
nlohmann::ordered_json to_json(const IdentityReport& r, int digits);
nlohmann::ordered_json to_json(const SuiteReport& s);

/// Monotonic wall clock in seconds.
double now_seconds();

}  // namespace borwein
