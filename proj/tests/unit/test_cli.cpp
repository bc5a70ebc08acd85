#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

#include "commands.hpp"
#include "mcc/hirzebruch.hpp"
#include "mcc/motives.hpp"
#include "model_file.hpp"

using namespace mcc;
using mcc::cli::Json;

namespace {

struct Ran {
  int code;
  Json json;
  std::string out;
  std::string err;
};

Ran run(std::vector<std::string> args) {
  const auto r = cli::run(args);
  Json j;
  if (r.exit_code == 0 && !r.out.empty() && r.out[0] == '{') j = Json::parse(r.out);
  return {r.exit_code, j, r.out, r.err};
}

std::string data(const std::string& name) { return std::string(MCC_TEST_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("motivic_cc_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::string check_status(const Json& report, const std::string& name) {
  for (const auto& c : report["checks"]) {
    if (c["name"] == name) return c["status"].get<std::string>();
  }
  return "absent";
}

bool has_decimal(const std::string& s) { return std::regex_search(s, std::regex("[0-9]\\.[0-9]")); }

}  // namespace

TEST_CASE("zeta") {
  auto r = run({"zeta", "--builtin", "P1", "--order", "2", "--spec", "uv"});
  REQUIRE(r.code == 0);
  CHECK(r.json["coefficients"][2] == "1+uv+u^2v^2");
  CHECK(check_status(r.json, "polyring_vs_adams_exp") == "ok");

  r = run({"zeta", "--builtin", "point", "--order", "5"});
  for (const auto& c : r.json["coefficients"]) CHECK(c == "1");

  r = run({"zeta", "--builtin", "P1", "--spec", "chi", "--order", "6"});
  for (std::size_t n = 0; n <= 6; ++n) CHECK(r.json["coefficients"][n] == std::to_string(n + 1));

  r = run({"zeta", "--builtin", "P2", "--spec", "chi-y", "--order", "3"});
  CHECK(r.json["coefficients"][1] == "1+y+y^2");
  CHECK(check_status(r.json, "degree_vs_class_route") == "ok");
}

TEST_CASE("exponents") {
  auto r = run({"exponents", "--dim", "2", "--order", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.json["coefficients"] == Json::array({"1", "L", "L^2"}));
  r = run({"exponents", "--dim", "1"});
  CHECK(r.json["coefficients"] == Json::array({"1", "0", "0"}));
  r = run({"exponents", "--dim", "3"});
  CHECK(r.json["coefficients"] == Json::array({"1", "L+L^2", "L^2+L^3+L^4"}));
  CHECK(r.json["euler_characteristics"] == Json::array({"1", "2", "3"}));
  CHECK(check_status(r.json, "closed_form") == "ok");
  CHECK(run({"exponents", "--dim", "3", "--order", "4"}).code == 3);
  CHECK(run({"exponents", "--dim", "2", "--order", "9"}).code == 0);
  CHECK(run({"exponents"}).code == 2);
}

TEST_CASE("exponents of a user series") {
  const auto path = temp_file("series.json", cli::series_to_json(surface_punctual_series(4)).dump());
  auto r = run({"exponents", "--series", path.string(), "--order", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.json["coefficients"] == Json::array({"1", "L", "L^2", "L^3"}));
  // 1 + t/2 is not integral, so no integrality check applies; the file stops at t^2
  const auto bad = temp_file("half.json",
                             R"({"var": "y", "order": 2, "coefficients": [[{"e": 0, "c": "1"}], [{"e": 0, "c": "1/2"}], []]})");
  CHECK(run({"exponents", "--series", bad.string(), "--order", "2"}).code == 0);
  CHECK(run({"exponents", "--series", bad.string(), "--order", "3"}).code == 2);
}

TEST_CASE("classes") {
  auto hilb = run({"classes", "--builtin", "P1", "--dim", "1", "--kind", "hilb", "--order", "4"});
  auto sym = run({"classes", "--builtin", "P1", "--dim", "1", "--kind", "sym", "--order", "4"});
  REQUIRE(hilb.code == 0);
  CHECK(hilb.json["coefficients"] == sym.json["coefficients"]);
  CHECK(check_status(hilb.json, "equals_sym") == "ok");

  auto p2 = run({"classes", "--builtin", "P2", "--dim", "2", "--kind", "hilb", "--order", "3"});
  CHECK(check_status(p2.json, "degree_vs_motivic_hilbert") == "ok");
  CHECK(check_status(p2.json, "mt2_route") == "ok");

  auto al = run({"classes", "--builtin", "point", "--dim", "3", "--kind", "aluffi", "--order", "4"});
  REQUIRE(al.code == 0);
  CHECK(al.json["degree_series"] == Json::array({"1", "1", "3", "6", "13"}));
  CHECK(al.json["notes"][0].get<std::string>().find("(-t)^n") != std::string::npos);

  auto ch = run({"classes", "--builtin", "P1xP1", "--dim", "2", "--kind", "chern", "--order", "3"});
  CHECK(check_status(ch.json, "normalized_limit_of_hilb") == "ok");
  CHECK(check_status(ch.json, "degree_vs_euler_product") == "ok");

  auto cf = run({"classes", "--builtin", "P1", "--dim", "1", "--kind", "config", "--order", "3"});
  CHECK(cf.json["degree_series"][2] == "y^2");

  CHECK(run({"classes", "--builtin", "P3", "--dim", "2", "--kind", "virtual"}).code == 2);
  CHECK(run({"classes", "--builtin", "P1", "--dim", "4", "--kind", "hilb", "--order", "4"}).code == 3);
  CHECK(run({"classes", "--builtin", "P1", "--dim", "2", "--kind", "bogus"}).code == 2);
}

TEST_CASE("virtual classes report the sign-rule check honestly") {
  auto r = run({"classes", "--builtin", "point", "--dim", "3", "--kind", "virtual", "--order", "4"});
  REQUIRE(r.code == 0);
  CHECK(check_status(r.json, "t_to_minus_t_agreement") == "ok");
  CHECK(r.json.contains("neg_t_form"));
}

TEST_CASE("model files") {
  auto a = run({"zeta", "--model", data("p1_handwritten.json"), "--order", "4"});
  auto b = run({"zeta", "--builtin", "P1", "--order", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.json["coefficients"] == b.json["coefficients"]);

  auto np = run({"classes", "--model", data("affine_line.json"), "--dim", "2", "--kind", "hilb", "--order", "3"});
  REQUIRE(np.code == 0);
  CHECK(check_status(np.json, "mt2_route") == "ok");
  CHECK(check_status(np.json, "degree_vs_motivic_hilbert") == "skipped");
  CHECK_FALSE(np.json.contains("degree_series"));

  CHECK(run({"zeta", "--model", data("bad_degree.json")}).code == 2);
  CHECK(run({"zeta", "--model", data("missing_basis.json")}).code == 2);
  CHECK(run({"zeta", "--model", data("not_json.json")}).code == 2);
  CHECK(run({"zeta", "--model", data("no_such_file.json")}).code == 2);
  CHECK(run({"zeta", "--builtin", "P9"}).code == 2);
  CHECK(run({"zeta"}).code == 2);
  CHECK(run({"zeta", "--builtin", "P1", "--model", data("p1_handwritten.json")}).code == 2);
}

TEST_CASE("export-model round trip") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto exported = cli::run({"export-model", "--builtin", name});
    REQUIRE(exported.exit_code == 0);
    const auto path = temp_file("model.json", exported.out);
    CHECK(cli::model_from_json(cli::read_json_file(path.string())) == builtin_model(name));
    CHECK(cli::run({"export-model", "--model", path.string()}).out == exported.out);
  }
}

TEST_CASE("order cap") {
  ::setenv("MOTIVIC_CC_MAX_ORDER", "3", 1);
  CHECK(run({"zeta", "--builtin", "P1", "--order", "4"}).code == 3);
  CHECK(run({"zeta", "--builtin", "P1", "--order", "3"}).code == 0);
  ::unsetenv("MOTIVIC_CC_MAX_ORDER");
  CHECK(cli::max_order() == 12);
  CHECK(run({"zeta", "--builtin", "P1", "--order", "13"}).code == 3);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "lambda", "--order", "6", "--seed", "7"});
  REQUIRE(r.code == 0);
  for (const auto& name : {"lambda.axiom_i_power_zero", "lambda.axiom_iv_sum_exponent", "lambda.axiom_vii_substitution"}) {
    CHECK(check_status(r.json, name) == "ok");
  }
  for (const auto& c : r.json["checks"]) CHECK(c["instances"].get<std::size_t>() >= 4);
  CHECK(cli::run({"verify", "--suite", "lambda", "--order", "6", "--seed", "7"}).out == r.out);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("output is deterministic and exact") {
  const std::vector<std::vector<std::string>> commands{
      {"zeta", "--builtin", "P2xP2", "--order", "4"},
      {"exponents", "--dim", "4"},
      {"classes", "--builtin", "P2", "--dim", "2", "--kind", "hilb", "--order", "3"},
      {"classes", "--builtin", "P3", "--dim", "3", "--kind", "virtual", "--order", "3"},
      {"classes", "--builtin", "P1", "--dim", "3", "--kind", "aluffi", "--order", "4", "--pretty"},
      {"verify", "--suite", "hirzebruch", "--order", "8"},
  };
  for (const auto& args : commands) {
    const auto first = cli::run(args);
    CHECK(first.exit_code == 0);
    CHECK_FALSE(has_decimal(first.out));
    CHECK(cli::run(args).out == first.out);
  }
}

TEST_CASE("help exits cleanly") {
  const auto r = cli::run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("classes") != std::string::npos);
}
