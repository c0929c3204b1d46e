#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "jackpoly/verify.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = jackpoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool is_int_or_bigint(const nlohmann::json& v) {
  if (v.is_number_integer()) return true;
  if (!v.is_string()) return false;
  const std::string s = v.get<std::string>();
  return !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
}

bool is_alpha_poly(const nlohmann::json& v) {
  if (!v.is_array()) return false;
  for (const auto& term : v) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned() || !is_int_or_bigint(term[1])) {
      return false;
    }
  }
  return true;
}

bool is_partition(const nlohmann::json& v) {
  if (!v.is_array()) return false;
  for (const auto& p : v) {
    if (!p.is_number_unsigned() || p.get<unsigned>() == 0) return false;
  }
  return true;
}

// Structural check of the JackResult record layout.
bool matches_record_schema(const nlohmann::json& j) {
  if (!j.is_object() || !is_partition(j.value("lambda", nlohmann::json())) || !j.contains("n") ||
      !j["n"].is_number_unsigned() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    return false;
  }
  for (const auto& c : j["coeffs"]) {
    if (!is_partition(c.value("mu", nlohmann::json()))) return false;
    const auto& v = c["v"];
    const bool rational = v.is_object() && is_alpha_poly(v.value("num", nlohmann::json())) &&
                          is_alpha_poly(v.value("den", nlohmann::json()));
    if (!is_alpha_poly(v) && !rational) return false;
    if (rational && !j.value("flagged", false)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("compute plain") {
  const Run r = run({"compute", "--partition", "1,1", "--n", "2", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out == "J[1,1] = (2) m[1,1]\n");
  CHECK(r.err.empty());
  CHECK(run({"compute", "--partition", "2", "--n", "2"}).out == "J[2] = (1 + a) m[2] + (2) m[1,1]\n");
  CHECK(run({"--alpha", "1", "compute", "--partition", "2", "--n", "2"}).out == "J[2] = (2) m[2] + (2) m[1,1]\n");
}

TEST_CASE("compute json follows the record schema") {
  const Run r = run({"compute", "--partition", "2", "--n", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(matches_record_schema(j));
  CHECK(j["lambda"] == nlohmann::json::array({2}));
  CHECK(j["coeffs"][0]["v"] == nlohmann::json::parse("[[0,1],[1,1]]"));
  CHECK(j["coeffs"][1]["mu"] == nlohmann::json::array({1, 1}));
  CHECK(j["coeffs"][1]["v"] == nlohmann::json::parse("[[0,2]]"));
  for (const char* p : {"4,2", "3,2,1", "1,1,1,1,1", "6"}) {
    const Run big = run({"compute", "--partition", p, "--n", "6", "--format", "json"});
    CHECK(matches_record_schema(nlohmann::json::parse(big.out)));
  }
}

TEST_CASE("compute csv") {
  const Run r = run({"compute", "--partition", "2", "--n", "2", "--format", "csv"});
  CHECK(r.out == "lambda,mu,v,v_tilde\n2,2,1+a,1+a\n2,\"1,1\",2,1\n");
}

TEST_CASE("compute usage errors") {
  const Run too_long = run({"compute", "--partition", "2,1,1", "--n", "2"});
  CHECK(too_long.code == 2);
  CHECK(too_long.out.empty());
  CHECK(too_long.err.find("partition has 3 parts but n = 2") != std::string::npos);
  CHECK(run({"compute", "--partition", "1,2", "--n", "2"}).code == 2);
  CHECK(run({"compute", "--partition", "2,x", "--n", "2"}).code == 2);
  CHECK(run({"compute", "--partition", "2", "--n", "0"}).code == 2);
  CHECK(run({"compute", "--partition", "2"}).code == 2);
  CHECK(run({"compute", "--partition", "2", "--n", "2", "--format", "xml"}).code == 2);
  CHECK(run({"--alpha", "1/0", "compute", "--partition", "2", "--n", "2"}).code == 2);
  CHECK(run({"--jobs", "0", "compute", "--partition", "2", "--n", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--max-weight", "4", "--checks", "eigen,oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "eigen: 12/12 pass\noracle: 12/12 pass\n");
  const Run pos = run({"verify", "--max-weight", "2", "--checks", "positivity"});
  CHECK(pos.code == 0);
  CHECK(pos.out == "positivity: 4/4 pass\n");
  CHECK(run({"verify", "--checks", "frobnicate"}).code == 2);
  CHECK(run({"verify", "--max-weight", "0"}).code == 2);
  CHECK(run({"--alpha", "2", "verify", "--max-weight", "2"}).code == 2);

  const Run json = run({"verify", "--max-weight", "3", "--format", "json"});
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == jackpoly::all_checks().size());
}

TEST_CASE("verify output does not depend on --jobs") {
  const Run serial = run({"--jobs", "1", "verify", "--max-weight", "4"});
  const Run wide = run({"verify", "--max-weight", "4", "--jobs", "3"});
  CHECK(serial.code == 0);
  CHECK(serial.out == wide.out);
}

TEST_CASE("failing reports carry the first counterexample") {
  jackpoly::VerifyReport report;
  jackpoly::CheckOutcome ok;
  ok.check = jackpoly::Check::eigen;
  ok.passed = ok.total = 3;
  jackpoly::CheckOutcome bad;
  bad.check = jackpoly::Check::positivity;
  bad.passed = 2;
  bad.total = 3;
  bad.counterexample = "lambda = 2, mu = 1,1: v = (-1), v_tilde = (-1)";
  report.outcomes = {ok, bad};
  CHECK_FALSE(report.all_passed());
  CHECK(report.render() ==
        "eigen: 3/3 pass\npositivity: 2/3 pass, 1 FAIL\nfirst counterexample (positivity):\n"
        "  lambda = 2, mu = 1,1: v = (-1), v_tilde = (-1)\n");
}

TEST_CASE("table csv") {
  const Run r = run({"table", "--max-weight", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "lambda,mu,v,v_tilde\n1,1,1,1\n2,2,1+a,1+a\n2,\"1,1\",2,1\n\"1,1\",\"1,1\",2,1\n");
  CHECK(run({"table", "--max-weight", "1"}).out == "lambda,mu,v,v_tilde\n1,1,1,1\n");
  CHECK(run({"table", "--max-weight", "0"}).out == "lambda,mu,v,v_tilde\n");
}

TEST_CASE("table json and file output") {
  const Run r = run({"table", "--max-weight", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[2]["mu"] == nlohmann::json::array({1, 1}));
  CHECK(j[2]["v_tilde"] == nlohmann::json::parse("[[0,1]]"));
  CHECK(nlohmann::json::parse(run({"table", "--max-weight", "0", "--format", "json"}).out).empty());

  const auto path = std::filesystem::temp_directory_path() / "jackpoly_table_test.csv";
  CHECK(run({"table", "--max-weight", "2", "--output", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == run({"table", "--max-weight", "2"}).out);
  std::filesystem::remove(path);

  CHECK(run({"table", "--max-weight", "2", "--output", "/nonexistent-dir/x.csv"}).code == 2);
  CHECK(run({"table", "--max-weight", "2", "--format", "plain"}).code == 2);
}

TEST_CASE("table is independent of --jobs") {
  CHECK(run({"table", "--max-weight", "5", "--jobs", "4"}).out == run({"table", "--max-weight", "5"}).out);
}
