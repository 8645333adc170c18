#include <doctest.h>

#include <sstream>

#include "exbetti/cli.hpp"
#include "exbetti/json_io.hpp"
#include "support.hpp"

using namespace exbetti;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return support::fixture_path(name); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("realize-ideal reproduces the first column ideal") {
    auto r = run({"realize-ideal", "--spec", fx("spec_col1.json")});
    REQUIRE(r.code == kExitOk);
    auto doc = parse_json(r.out);
    CHECK(ideal_from_json(doc["witness"]) == ideal_from_json(support::load_fixture("col1_ideal.json")));
    CHECK(doc["verdicts"]["strict-paper"]["feasible"] == true);
    CHECK(doc["verdicts"]["coupled"]["feasible"] == true);
  }

  TEST_CASE("corners on the rank-four example") {
    auto r = run({"corners", "-i", fx("rank4_module.json")});
    REQUIRE(r.code == kExitOk);
    auto doc = parse_json(r.out);
    CHECK(doc["matrix"] == Json::parse("[[1,0,0,0],[1,0,1,3],[1,0,0,0]]"));
    CHECK(doc["corner_ideals"] == Json::parse("[1,3,4]"));
  }

  TEST_CASE("check-stable reports the first violation") {
    auto r = run({"check-stable", "--strong", "-i", fx("ideal_x2sq.json")});
    REQUIRE(r.code == kExitOk);
    auto doc = parse_json(r.out);
    CHECK(doc["result"] == false);
    CHECK(doc["violation"]["u"] == "x2^2");
    CHECK(doc["violation"]["i"] == 2);
    CHECK(doc["violation"]["j"] == 1);
  }

  TEST_CASE("stdin input") {
    auto r = run({"diagram", "-i", "-"}, R"({"n": 6, "generators": ["x1^2", "x1*x2", "x1*x3"]})");
    CHECK(r.code == kExitOk);
    CHECK(r.out == "1: 3 3 1*\n");
  }

  TEST_CASE("exit codes") {
    auto infeasible = run({"realize-ideal", "--mode", "strict-paper", "--spec", fx("spec_discrepancy.json")});
    CHECK(infeasible.code == kExitInfeasible);
    CHECK(parse_json(infeasible.err)["error"] == "InfeasibleSpec");
    CHECK(run({"realize-ideal", "--spec", fx("spec_discrepancy.json")}).code == kExitOk);

    auto uncovered = run({"realize-ideal", "--spec", "-"},
                         R"({"n":4,"corners":[{"k":2,"l":2,"a":1},{"k":1,"l":3,"a":1}]})");
    CHECK(uncovered.code == kExitUncovered);

    CHECK(run({"realize-module", "--spec", fx("spec_module_bound_bad.json")}).code == kExitInfeasible);
    CHECK(run({"realize-module", "--spec", fx("spec_module_bound_ok.json")}).code == kExitOk);

    auto missing = run({"betti", "-i", "/nonexistent.json"});
    CHECK(missing.code == kExitUsage);
    CHECK(parse_json(missing.err).contains("error"));
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    auto unstable = run({"betti", "-i", fx("principal_x1x2.json")});
    CHECK(unstable.code == kExitUsage);
    CHECK(parse_json(unstable.err)["error"] == "NotStable");
  }

  TEST_CASE("oracle-betti compares with the formula") {
    auto r = run({"oracle-betti", "-i", fx("three_column_module.json")});
    REQUIRE(r.code == kExitOk);
    CHECK(parse_json(r.out)["agree"] == true);
    auto p = run({"oracle-betti", "-i", fx("principal_x1x2.json")});
    REQUIRE(p.code == kExitOk);
    CHECK(parse_json(p.out)["ek"].is_null());
  }

  TEST_CASE("census stream") {
    auto r = run({"census", "--n", "2", "--max-degree", "3"});
    REQUIRE(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      CHECK(dump_json(to_json(ideal_from_json(parse_json(line)))) == dump_json(parse_json(line)));
      ++count;
    }
    CHECK(count == 14);
  }

  TEST_CASE("version") {
    auto r = run({"--version"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("exbetti ", 0) == 0);
  }
}
