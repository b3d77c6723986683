#pragma once

#include <string>
#include <vector>

#include "vsc/rewrite.hpp"
#include "vsc/term.hpp"

namespace vsc {

// Property suites over enumerated terms and replays of the concrete worked
// examples, with stable JSON reporting.

struct SuiteOptions {
  std::size_t max_size = 7;
  std::vector<std::string> free_pool = {"y"};
  std::size_t fuel = 200;
  std::size_t bfs_budget = 5000;
};

struct SuiteReport {
  std::string suite;
  std::size_t population = 0;  // enumerated terms seen
  std::size_t checked = 0;     // terms the property applied to
  std::size_t failures = 0;
  std::size_t skipped = 0;     // undecided (fuel/budget) cases, never failures
  std::string counterexample;  // first failing term, concrete syntax
  std::string details;         // what went wrong there
  double wall_ms = 0.0;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
std::string report_json(const SuiteReport& r);

struct ExperimentReport {
  std::string name;
  bool passed = false;
  std::vector<std::string> log;
  std::string json;  // evaluations with full traces
};

const std::vector<std::string>& experiment_names();
ExperimentReport run_experiment(const std::string& name);

// JSON for one evaluation: outcome record plus the {path, rule, term} trace.
std::string outcome_json(const TermPtr& start, Strategy s, const Outcome& out);

}  // namespace vsc
