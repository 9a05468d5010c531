#include "borwein/cli.hpp"

#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "borwein");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = borwein::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("borwein_test_" + name);
}

const std::vector<std::string> k1_flags{"--a", "1", "--ap", "2", "--b", "1,4/3", "--bp", "2", "--c", "1/3,2/3", "--cp", "1"};

std::vector<std::string> kdf_args(std::vector<std::string> extra) {
  std::vector<std::string> v{"kdf"};
  v.insert(v.end(), k1_flags.begin(), k1_flags.end());
  v.insert(v.end(), extra.begin(), extra.end());
  return v;
}

std::string field(const std::string& out, const std::string& key) {
  for (const auto& l : lines(out))
    if (l.rfind(key, 0) == 0) {
      auto v = l.substr(key.size());
      v.erase(0, v.find_first_not_of(' '));
      return v;
    }
  return {};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "all", "--digits", "14"}).code == 2);
  CHECK(run({"verify", "--suite", "everything"}).code == 2);
  CHECK(run({"verify", "--suite", "exact", "--order", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "theorem", "--tol", "-1"}).code == 2);
  CHECK(run({"verify", "--suite", "theorem", "--tol", "abc"}).code == 2);
  CHECK(run({"lvalue", "--n", "2", "--method", "dirichlet"}).code == 2);
  CHECK(run({"lvalue", "--n", "4", "--method", "mellin"}).code == 2);
  CHECK(run({"lvalue", "--n", "1", "--method", "trapezoid"}).code == 2);
  CHECK(run({"lvalue", "--n", "1"}).code == 2);
  CHECK(run({"lvalue", "--n", "3", "--method", "dirichlet", "--N", "10"}).code == 2);
  CHECK(run(kdf_args({"--x", "0", "--y", "0", "--route", "sideways"})).code == 2);
  CHECK(run(kdf_args({"--x", "1/0", "--y", "0", "--route", "series"})).code == 2);
  CHECK(run({"kdf", "--a", "1", "--ap", "x/2", "--b", "1", "--bp", "1", "--c", "1", "--cp", "1", "--x", "0", "--y", "0",
             "--route", "series"})
            .code == 2);
  CHECK(run({"qexp", "--series", "zeta", "--order", "5"}).code == 2);
  CHECK(run({"qexp", "--series", "eta:1^x", "--order", "5"}).code == 2);
  CHECK(run({"qexp", "--series", "eta:1^1", "--order", "5"}).code == 2);  // q^(1/24) is off the 1/3 grid
  CHECK(run({"qexp", "--series", "a"}).code == 2);
}

TEST_CASE("help and version exit with 0") {
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(BORWEIN_VERSION) != std::string::npos);
}

TEST_CASE("qexp dumps") {
  const auto f = run({"qexp", "--series", "f", "--order", "10"});
  CHECK(f.code == 0);
  const auto fl = lines(f.out);
  REQUIRE(fl.size() == 10);
  CHECK(fl[0] == "1/1\t1/1");
  const auto a = lines(run({"qexp", "--series", "a", "--order", "2"}).out);
  CHECK(a == std::vector<std::string>{"0/1\t1/1", "1/1\t6/1", "2/1\t0/1"});
  const auto e0 = lines(run({"qexp", "--series", "E0", "--order", "3"}).out);
  CHECK(std::find(e0.begin(), e0.end(), "1/3\t1/1") != e0.end());
  CHECK(run({"qexp", "--series", "eta:1^3,3^-1", "--order", "30"}).out ==
        run({"qexp", "--series", "b", "--order", "30"}).out);
  const auto path = temp_file("dump.txt");
  CHECK(run({"qexp", "--series", "c", "--order", "4", "--out", path.string()}).code == 0);
  CHECK(slurp(path) == run({"qexp", "--series", "c", "--order", "4"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("lvalue subcommand") {
  const auto m = run({"lvalue", "--n", "1", "--method", "mellin"});
  CHECK(m.code == 0);
  const auto a = run({"lvalue", "--n", "1", "--method", "alpha_integral"});
  CHECK(a.code == 0);
  CHECK(field(m.out, "value").substr(0, 30) == field(a.out, "value").substr(0, 30));
  const auto d = run({"lvalue", "--n", "3", "--method", "dirichlet", "--N", "20000"});
  CHECK(d.code == 0);
  CHECK(!field(d.out, "partial_sum").empty());
  CHECK(field(d.out, "tail").find("heuristic") != std::string::npos);
  CHECK(field(d.out, "terms_used") == "20000");
  CHECK(field(d.out, "value").substr(0, 9) == "5.6416957");
}

TEST_CASE("kdf subcommand") {
  const auto o = run(kdf_args({"--x", "0", "--y", "0", "--route", "series"}));
  CHECK(o.code == 0);
  CHECK(field(o.out, "margins") == "2/3 1 2/3");
  CHECK(field(o.out, "boundary_ok") == "true");
  CHECK(field(o.out, "value").substr(0, 6) == "1.0000");
  const auto s = run(kdf_args({"--x", "1/2", "--y", "0.5", "--route", "series"}));
  const auto i = run(kdf_args({"--x", "1/2", "--y", "1/2", "--route", "integral"}));
  CHECK(s.code == 0);
  CHECK(i.code == 0);
  CHECK(field(s.out, "value").substr(0, 25) == field(i.out, "value").substr(0, 25));
  // 27 L(f,1) = 3.28138...
  const auto b = run(kdf_args({"--x", "1", "--y", "1", "--route", "integral"}));
  CHECK(b.code == 0);
  CHECK(field(b.out, "value").substr(0, 20) == "3.281382482222510328");
  // boundary with a non-positive margin
  const auto r = run({"kdf", "--a", "1", "--ap", "1", "--b", "1,2", "--bp", "1", "--c", "1/3,2/3", "--cp", "1", "--x",
                      "1", "--y", "1/2", "--route", "series"});
  CHECK(r.code == 1);
  CHECK(field(r.out, "boundary_ok") == "false");
  CHECK(r.err.find("boundary") != std::string::npos);
}

TEST_CASE("verify exact: exit code, table and JSON round trip") {
  const auto path = temp_file("exact.json");
  const auto v = run({"verify", "--suite", "exact", "--order", "40", "--json", path.string()});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  const std::string text = slurp(path);
  const auto j = nlohmann::ordered_json::parse(text);
  CHECK(j.dump(2) + "\n" == text);
  CHECK(j["all_pass"] == true);
  CHECK(j["digits"] == 40);
  CHECK(j["tool_version"] == BORWEIN_VERSION);
  REQUIRE(j["checks"].size() >= 10);
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c["methods"][1] == "order 40");
    CHECK(c["lhs"].is_string());
  }
  const std::vector<std::string> keys{"name", "lhs", "rhs", "abs_err", "tol", "pass", "methods", "seconds"};
  std::vector<std::string> got;
  for (const auto& [k, _] : j["checks"][0].items()) got.push_back(k);
  CHECK(got == keys);

  // a second run differs only in timing fields
  const auto path2 = temp_file("exact2.json");
  CHECK(run({"verify", "--suite", "exact", "--order", "40", "--json", path2.string()}).code == 0);
  auto j2 = nlohmann::ordered_json::parse(slurp(path2));
  auto j1 = j;
  for (auto* doc : {&j1, &j2}) {
    (*doc)["total_seconds"] = "";
    for (auto& c : (*doc)["checks"]) c["seconds"] = "";
  }
  CHECK(j1.dump() == j2.dump());
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("verify theorem: three reports, exit code follows the tolerance") {
  const auto path = temp_file("theorem.json");
  const auto v = run({"verify", "--suite", "theorem", "--digits", "40", "--json", path.string()});
  CHECK(v.code == 0);
  const auto j = nlohmann::ordered_json::parse(slurp(path));
  REQUIRE(j["checks"].size() == 3);
  CHECK(j["all_pass"] == true);
  for (const auto& c : j["checks"]) CHECK(c["tol"].get<std::string>().rfind("1.0", 0) == 0);
  std::filesystem::remove(path);
  // an unattainable tolerance fails the checks
  CHECK(run({"verify", "--suite", "theorem", "--digits", "20", "--tol", "1e-40"}).code == 1);
}
