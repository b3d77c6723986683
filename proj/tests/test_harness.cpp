#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "vsc/harness.hpp"
#include "vsc/parser.hpp"

using namespace vsc;
using nlohmann::json;

namespace {

SuiteOptions small_opts() {
  SuiteOptions o;
  o.max_size = 5;
  o.free_pool = {"y"};
  o.fuel = 100;
  o.bfs_budget = 500;
  return o;
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 15);
  CHECK_THROWS_AS(run_suite("no-such-suite", small_opts()), std::invalid_argument);
}

TEST_CASE("every suite is clean at small scale") {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, small_opts());
    CAPTURE(name);
    CAPTURE(r.counterexample);
    CAPTURE(r.details);
    CHECK(r.failures == 0);
    CHECK(r.population > 0);
  }
}

TEST_CASE("divergent terms enter the population at size 8") {
  // (x x)[x <- \d.d d] cycles; suites must skip it, never fail on it
  SuiteOptions o;
  o.max_size = 8;
  o.free_pool = {"y"};
  o.fuel = 200;
  o.bfs_budget = 2000;
  for (const char* name : {"subject-reduction-shrinking", "subject-expansion",
                           "untyped-normalization", "fullness"}) {
    SuiteReport r = run_suite(name, o);
    CAPTURE(name);
    CAPTURE(r.counterexample);
    CAPTURE(r.details);
    CHECK(r.failures == 0);
    CHECK(r.population > 16000);
  }
}

TEST_CASE("suites are deterministic") {
  SuiteReport a = run_suite("harmony-open", small_opts());
  SuiteReport b = run_suite("harmony-open", small_opts());
  CHECK(a.population == b.population);
  CHECK(a.checked == b.checked);
  CHECK(a.failures == b.failures);
  CHECK(a.skipped == b.skipped);
}

TEST_CASE("the vsc-not-diamond suite really finds the peak") {
  SuiteReport r = run_suite("vsc-not-diamond", small_opts());
  CHECK(r.failures == 0);
  CHECK(r.checked == 1);
}

TEST_CASE("suite reports serialize with a stable schema") {
  SuiteReport r = run_suite("harmony-open", small_opts());
  json j = json::parse(report_json(r));
  CHECK(j.at("suite") == "harmony-open");
  CHECK(j.at("failures") == 0);
  CHECK(j.at("counterexample").is_null());
  CHECK(j.contains("population"));
  CHECK(j.contains("checked"));
  CHECK(j.contains("skipped"));
  CHECK(j.contains("wall_ms"));

  SuiteReport fake;
  fake.suite = "x";
  fake.failures = 1;
  fake.counterexample = "(\\x.x) y";
  fake.details = "boom";
  json jf = json::parse(report_json(fake));
  CHECK(jf.at("counterexample").at("term") == "(\\x.x) y");
  CHECK_NOTHROW(parse(jf.at("counterexample").at("term").get<std::string>()));
}

TEST_CASE("experiments replay the worked examples") {
  CHECK(experiment_names().size() == 6);
  for (const auto& name : experiment_names()) {
    ExperimentReport r = run_experiment(name);
    CAPTURE(name);
    for (const auto& line : r.log) CAPTURE(line);
    CHECK(r.passed);
    // the JSON trace parses and carries the evaluations
    json j = json::parse(r.json);
    CHECK(j.at("name") == name);
    CHECK(j.at("passed") == true);
    CHECK(j.at("evaluations").is_array());
  }
  CHECK_THROWS_AS(run_experiment("no-such-demo"), std::invalid_argument);
}

TEST_CASE("outcome JSON carries the trace") {
  TermPtr t = parse("(\\x.x) (\\y.y)");
  Outcome out = evaluate(t, Strategy::Open, 10);
  json j = json::parse(outcome_json(t, Strategy::Open, out));
  CHECK(j.at("outcome") == "normal");
  CHECK(j.at("result") == "\\y.y");
  CHECK(j.at("trace").size() == 2);
  CHECK(j.at("trace")[0].at("rule") == "m");
  CHECK(j.at("trace")[0].at("path").is_array());
  CHECK(j.at("counts").at("m") == 1);
  CHECK(j.at("counts").at("e") == 1);
}
