#include "borwein/cli.hpp"

#include "borwein/hyper.hpp"
#include "borwein/lvalue.hpp"
#include "borwein/qexp.hpp"
#include "borwein/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace borwein::cli {

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct VerifyArgs {
  std::string suite = "all";
  int order = suite::kDefaultOrder;
  int digits = 40;
  std::string tol;
  std::string json;
};

struct LValueArgs {
  int n = 0;
  std::string method;
  long count = 1000000;
  int digits = 40;
};

struct KdfArgs {
  std::string a, ap, b, bp, c, cp;
  std::string x, y;
  std::string route;
  int digits = 40;
};

struct QexpArgs {
  std::string series;
  int order = 0;
  std::string out;
};

void check_digits(int digits) {
  if (digits < 15) throw UsageError("--digits must be at least 15");
}

std::vector<Rational> rational_list(const std::string& flag, const std::string& text) {
  try {
    return hyper::parse_rational_list(text);
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// "1/2", "1", "0.5" or "5e-1".
Real parse_point(const std::string& flag, const std::string& text) {
  if (text.find_first_of(".eE") == std::string::npos) {
    try {
      return to_real(hyper::parse_rational(text));
    } catch (const DomainError& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": cannot parse '" + text + "'");
  }
}

std::string rational_text(const Rational& q) { return q.get_str(); }

// --- verify -----------------------------------------------------------------

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  check_digits(args.digits);
  suite::Options opt;
  opt.suite = suite::parse_suite(args.suite);
  opt.order = args.order;
  if (opt.order < 1) throw UsageError("--order must be positive");
  opt.digits = args.digits;
  if (!args.tol.empty()) {
    ScopedDigits guard(args.digits);
    Real tol;
    try {
      tol = Real(args.tol);
    } catch (const std::exception&) {
      throw UsageError("--tol: cannot parse '" + args.tol + "'");
    }
    if (!(tol > 0)) throw UsageError("--tol must be positive");
    opt.tol = tol;
  }
  std::ofstream json;
  if (!args.json.empty()) {
    json.open(args.json);
    if (!json) throw UsageError("cannot write " + args.json);
  }
  out << std::left;
  const auto report = suite::run(opt, [&](const IdentityReport& r) {
    out << (r.pass ? "PASS  " : "FAIL  ") << std::setw(44) << r.name << " |diff| " << to_decimal(r.abs_err, 3)
        << "  tol " << to_decimal(r.tol, 3) << "  " << std::fixed << std::setprecision(2) << r.seconds << "s"
        << std::defaultfloat;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n" << std::flush;
  });
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.pass ? 1 : 0;
  out << passed << "/" << report.checks.size() << " checks passed in " << std::fixed << std::setprecision(1)
      << report.total_seconds << "s" << std::defaultfloat << "\n";
  if (json.is_open()) json << to_json(report).dump(2) << "\n";
  return report.all_pass ? 0 : kFailed;
}

// --- lvalue -----------------------------------------------------------------

int cmd_lvalue(const LValueArgs& args, std::ostream& out) {
  check_digits(args.digits);
  if (args.n < 1 || args.n > 3) throw UsageError("--n must be 1, 2 or 3");
  const auto method = lvalue::parse_method(args.method);
  if (method == lvalue::LMethod::dirichlet && args.n != 3)
    throw UsageError("--method dirichlet is available for --n 3 only");
  if (args.count < 1000) throw UsageError("--N must be at least 1000");
  const Precision prec(args.digits);
  ScopedDigits guard(prec);
  const double t0 = now_seconds();
  const int shown = std::min(args.digits, 40);
  out << "n             " << args.n << "\n";
  out << "method        " << lvalue::to_string(method) << "\n";
  if (method == lvalue::LMethod::dirichlet) {
    const auto d = lvalue::dirichlet_sum(args.count);
    out << "partial_sum   " << to_decimal(d.partial_sum, 25) << "\n";
    out << "tail          " << to_decimal(d.tail, 6) << "  (heuristic)\n";
    out << "value         " << to_decimal(d.result.value, 25) << "\n";
    out << "err_estimate  " << to_decimal(d.result.err_estimate, 3) << "\n";
    out << "terms_used    " << d.result.terms_used << "\n";
  } else {
    const auto r = lvalue::l_value(args.n, method, prec, args.count);
    out << "value         " << to_decimal(r.value, shown) << "\n";
    out << "err_estimate  " << to_decimal(r.err_estimate, 3) << "\n";
    out << "terms_used    " << r.terms_used << "\n";
  }
  out << "seconds       " << std::fixed << std::setprecision(3) << now_seconds() - t0 << std::defaultfloat << "\n";
  return 0;
}

// --- kdf --------------------------------------------------------------------

int cmd_kdf(const KdfArgs& args, std::ostream& out, std::ostream& err) {
  check_digits(args.digits);
  const auto route = lvalue::parse_route(args.route);
  hyper::KdFParams p;
  p.a = rational_list("--a", args.a);
  p.ap = rational_list("--ap", args.ap);
  p.b = rational_list("--b", args.b);
  p.bp = rational_list("--bp", args.bp);
  p.c = rational_list("--c", args.c);
  p.cp = rational_list("--cp", args.cp);
  const Precision prec(args.digits);
  ScopedDigits guard(prec);
  const Real x = parse_point("--x", args.x);
  const Real y = parse_point("--y", args.y);
  const auto m = hyper::kdf_margins(p);
  out << "margins       " << rational_text(m.m1) << " " << rational_text(m.m2) << " " << rational_text(m.m3) << "\n";
  out << "boundary_ok   " << (m.boundary_ok ? "true" : "false") << "\n";
  const bool boundary = abs(x) == 1 || abs(y) == 1;
  if (boundary && !m.boundary_ok) {
    err << "kdf: (x, y) lies on the boundary and the convergence margins are not all positive\n";
    return kFailed;
  }
  if (boundary && route == lvalue::Route::series && !hyper::boundary_shape_supported(p)) {
    err << "kdf: unsupported shape for boundary evaluation (need A = A', B+1 over B, C+1 over C)\n";
    return kFailed;
  }
  // Boundary series are accelerated to a fixed target; the integral route keeps the full one.
  const Precision work = boundary && route == lvalue::Route::series
                             ? prec.with_tol(max(prec.target_tol, pow10(-lvalue::kSeriesRouteDigits)))
                             : prec;
  const double t0 = now_seconds();
  const auto r = route == lvalue::Route::series ? hyper::kdf_series(p, x, y, work) : hyper::kdf_integral(p, x, y, work);
  out << "route         " << lvalue::to_string(route) << "\n";
  out << "value         " << to_decimal(r.value, std::min(args.digits, 40)) << "\n";
  out << "err_estimate  " << to_decimal(r.err_estimate, 3) << "\n";
  out << "terms_used    " << r.terms_used << "\n";
  out << "method        " << to_string(r.method) << "\n";
  out << "seconds       " << std::fixed << std::setprecision(3) << now_seconds() - t0 << std::defaultfloat << "\n";
  return 0;
}

// --- qexp -------------------------------------------------------------------

// "eta:1^3,3^-1"
std::vector<qexp::EtaFactor> parse_eta(const std::string& text) {
  std::vector<qexp::EtaFactor> spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto caret = item.find('^');
    try {
      std::size_t used = 0;
      qexp::EtaFactor f{};
      if (caret == std::string::npos) {
        f.delta = std::stoi(item, &used);
        f.exponent = 1;
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const std::string d = item.substr(0, caret), r = item.substr(caret + 1);
        f.delta = std::stoi(d, &used);
        if (used != d.size()) throw std::invalid_argument(item);
        f.exponent = std::stoi(r, &used);
        if (used != r.size()) throw std::invalid_argument(item);
      }
      if (f.delta < 1) throw std::invalid_argument(item);
      spec.push_back(f);
    } catch (const std::logic_error&) {
      throw UsageError("bad eta factor '" + item + "' (expected delta^r with delta >= 1)");
    }
  }
  if (spec.empty()) throw UsageError("empty eta specification");
  return spec;
}

qexp::QSeries build_series(const std::string& name, int order) {
  using qexp::Lambert;
  using qexp::Theta;
  if (name == "a") return qexp::theta_series(Theta::a, order);
  if (name == "b") return qexp::theta_series(Theta::b, order);
  if (name == "c") return qexp::theta_series(Theta::c, order);
  if (name == "f") return qexp::f_coefficients(order);
  if (name == "bc3") return qexp::lambert_series(Lambert::bc3, order);
  if (name == "c_cubed") return qexp::lambert_series(Lambert::c_cubed, order);
  if (name == "E0") return qexp::lambert_series(Lambert::E0, order);
  if (name.rfind("eta:", 0) == 0) {
    const auto spec = parse_eta(name.substr(4));
    try {
      return qexp::eta_quotient(spec, order);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown series '" + name + "'");
}

int cmd_qexp(const QexpArgs& args, std::ostream& out) {
  if (args.order < 0) throw UsageError("--order must be nonnegative");
  const auto s = build_series(args.series, args.order);
  if (args.out.empty()) {
    qexp::dump(out, s);
    return 0;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + args.out);
  qexp::dump(file, s);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borwein theta L-values: exact q-series identities and hypergeometric evaluations", "borwein"};
  app.set_version_flag("--version", std::string(BORWEIN_VERSION));
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", va.suite, "all, exact, numeric or theorem")->capture_default_str();
  verify->add_option("--order", va.order, "q-order of the exact identities")->capture_default_str();
  verify->add_option("--digits", va.digits, "working decimal digits")->capture_default_str();
  verify->add_option("--tol", va.tol, "tolerance of the L-value checks (default 1e-10)");
  verify->add_option("--json", va.json, "write the suite report as JSON");

  LValueArgs la;
  auto* lv = app.add_subcommand("lvalue", "evaluate L(f,n)");
  lv->add_option("--n", la.n, "1, 2 or 3")->required();
  lv->add_option("--method", la.method, "mellin, dirichlet, alpha_integral or rz_intermediate")->required();
  lv->add_option("--N", la.count, "terms of the Dirichlet series")->capture_default_str();
  lv->add_option("--digits", la.digits, "working decimal digits")->capture_default_str();

  KdfArgs ka;
  auto* kdf = app.add_subcommand("kdf", "evaluate a Kampe de Feriet series");
  kdf->add_option("--a", ka.a, "joint upper parameters")->required();
  kdf->add_option("--ap", ka.ap, "joint lower parameters")->required();
  kdf->add_option("--b", ka.b, "first-variable upper parameters")->required();
  kdf->add_option("--bp", ka.bp, "first-variable lower parameters")->required();
  kdf->add_option("--c", ka.c, "second-variable upper parameters")->required();
  kdf->add_option("--cp", ka.cp, "second-variable lower parameters")->required();
  kdf->add_option("--x", ka.x, "first argument")->required();
  kdf->add_option("--y", ka.y, "second argument")->required();
  kdf->add_option("--route", ka.route, "series or integral")->required();
  kdf->add_option("--digits", ka.digits, "working decimal digits")->capture_default_str();

  QexpArgs qa;
  auto* qx = app.add_subcommand("qexp", "dump an exact q-series");
  qx->add_option("--series", qa.series, "a, b, c, f, bc3, c_cubed, E0 or eta:delta^r,...")->required();
  qx->add_option("--order", qa.order, "q-order")->required();
  qx->add_option("--out", qa.out, "output file (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*lv) return cmd_lvalue(la, out);
    if (*kdf) return cmd_kdf(ka, out, err);
    if (*qx) return cmd_qexp(qa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace borwein::cli
