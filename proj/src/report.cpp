#include "borwein/report.hpp"

#include <chrono>
#include <cstdio>

namespace borwein {

IdentityReport make_report(std::string name, const Real& lhs, const Real& rhs, const Real& tol,
                           std::pair<std::string, std::string> methods, double seconds) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = abs(lhs - rhs);
  r.tol = tol;
  r.pass = r.abs_err <= tol;
  r.methods = std::move(methods);
  r.seconds = seconds;
  return r;
}

namespace {

std::string seconds_text(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

nlohmann::ordered_json to_json(const IdentityReport& r, int digits) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["lhs"] = to_decimal(r.lhs, digits);
  j["rhs"] = to_decimal(r.rhs, digits);
  j["abs_err"] = to_decimal(r.abs_err, digits);
  j["tol"] = to_decimal(r.tol, digits);
  j["pass"] = r.pass;
  j["methods"] = nlohmann::ordered_json::array({r.methods.first, r.methods.second});
  j["seconds"] = seconds_text(r.seconds);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::ordered_json to_json(const SuiteReport& s) {
  nlohmann::ordered_json j;
  j["tool_version"] = s.tool_version;
  j["digits"] = s.digits;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c, s.digits));
  j["checks"] = checks;
  j["all_pass"] = s.all_pass;
  j["total_seconds"] = seconds_text(s.total_seconds);
  return j;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace borwein
