#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vsc/classify.hpp"
#include "vsc/derivation.hpp"
#include "vsc/harness.hpp"
#include "vsc/parser.hpp"
#include "vsc/rewrite.hpp"
#include "vsc/transform.hpp"

namespace {

using namespace vsc;

int cmd_eval(const std::string& text, const std::string& strat, std::size_t fuel, bool trace,
             bool as_json) {
  TermPtr t = parse(text);
  auto s = strategy_from_name(strat);
  if (!s) {
    std::cerr << "unknown strategy: " << strat << "\n";
    return 2;
  }
  Outcome out = evaluate(t, *s, fuel);
  if (as_json) {
    std::cout << outcome_json(t, *s, out) << "\n";
    return 0;
  }
  if (trace) {
    std::cout << print(t) << "\n";
    for (const auto& st : out.trace) {
      std::cout << "  -" << rule_name(st.rule) << "-> " << print(st.reduct) << "\n";
    }
  }
  switch (out.kind) {
    case Outcome::Kind::Normal:
      std::cout << "normal form: " << print(out.result) << "\n";
      break;
    case Outcome::Kind::Cycle:
      std::cout << "cycle after " << out.trace.size() << " steps (recurs at index "
                << out.loop_start << ")\n";
      break;
    case Outcome::Kind::Exhausted:
      std::cout << "fuel exhausted after " << out.trace.size() << " steps\n";
      break;
  }
  std::cout << "steps: m=" << out.count(RuleTag::M) << " e=" << out.count(RuleTag::E)
            << " beta_v=" << out.count(RuleTag::BetaV) << " beta_i=" << out.count(RuleTag::BetaI)
            << "\n";
  return 0;
}

int cmd_classify(const std::string& text) {
  TermPtr t = parse(text);
  for (const auto& [name, value] : classify_all(t)) {
    std::cout << name << ": " << (value ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_type(const std::string& text, const std::string& mode, std::size_t fuel,
             const std::string& emit) {
  TermPtr t = parse(text);
  InferMode m;
  if (mode == "open") {
    m = InferMode::Open;
  } else if (mode == "shrinking") {
    m = InferMode::Shrinking;
  } else {
    std::cerr << "unknown mode: " << mode << "\n";
    return 2;
  }
  InferResult r = infer(t, m, fuel);
  switch (r.status) {
    case InferResult::Status::Found: {
      std::cout << "typable: " << to_string(r.derivation->conclusion) << "\n";
      std::cout << "derivation size: " << deriv_size(r.derivation)
                << ", evaluation length: " << r.outcome.trace.size() << "\n";
      if (m == InferMode::Shrinking)
        std::cout << "shrinking: " << (is_shrinking(r.derivation) ? "true" : "false") << "\n";
      if (!emit.empty()) {
        std::ofstream f(emit);
        f << derivation_to_json(r.derivation) << "\n";
        std::cout << "derivation written to " << emit << "\n";
      }
      return 0;
    }
    case InferResult::Status::CycleDetected:
      std::cout << "no derivation: evaluation cycles"
                << (m == InferMode::Shrinking ? " (untypable with shrinking types)" : "") << "\n";
      return 1;
    case InferResult::Status::FuelExhausted:
      std::cout << "unknown: fuel exhausted before a normal form or a cycle\n";
      return 1;
  }
  return 1;
}

int cmd_check_derivation(const std::string& file) {
  std::ifstream f(file);
  if (!f) {
    std::cerr << "cannot open " << file << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    DerivPtr d = derivation_from_json(ss.str());
    Judgment j = check_derivation(d);
    std::cout << "valid: " << to_string(j) << "\n";
    std::cout << "size: " << deriv_size(d) << ", shrinking: "
              << (is_shrinking(d) ? "true" : "false") << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
}

int cmd_props(const std::string& suite, const SuiteOptions& opts, bool as_json) {
  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suite_names();
  } else {
    todo.push_back(suite);
  }
  std::size_t failures = 0;
  for (const auto& name : todo) {
    SuiteReport r = run_suite(name, opts);
    failures += r.failures;
    if (as_json) {
      std::cout << report_json(r) << "\n";
    } else {
      std::cout << r.suite << ": population=" << r.population << " checked=" << r.checked
                << " failures=" << r.failures << " skipped=" << r.skipped << " ("
                << static_cast<long>(r.wall_ms) << " ms)\n";
      if (r.failures > 0)
        std::cout << "  first counterexample: " << r.counterexample << "\n    " << r.details
                  << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

int cmd_demo(const std::string& name, bool as_json) {
  std::vector<std::string> todo;
  if (name == "all") {
    todo = experiment_names();
  } else {
    todo.push_back(name);
  }
  bool ok = true;
  for (const auto& n : todo) {
    ExperimentReport r = run_experiment(n);
    ok = ok && r.passed;
    if (as_json) {
      std::cout << r.json << "\n";
    } else {
      std::cout << "== " << r.name << " ==\n";
      for (const auto& line : r.log) std::cout << "  " << line << "\n";
      std::cout << (r.passed ? "passed" : "FAILED") << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vsc-lab: a strong call-by-value workbench"};
  app.require_subcommand(1);

  std::string term_text, strategy = "vsc", mode = "open", emit, suite = "all", demo_name = "all",
              deriv_file;
  std::size_t fuel = 200;
  bool trace = false, as_json = false;
  SuiteOptions opts;

  auto* eval = app.add_subcommand("eval", "evaluate a term under a strategy");
  eval->add_option("term", term_text)->required();
  eval->add_option("--strategy", strategy, "plotkin|fire|open|external|vsc");
  eval->add_option("--fuel", fuel);
  eval->add_flag("--trace", trace);
  eval->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify", "decide the grammar classes of a term");
  classify->add_option("term", term_text)->required();

  auto* type = app.add_subcommand("type", "infer a multi type derivation");
  type->add_option("term", term_text)->required();
  type->add_option("--mode", mode, "open|shrinking");
  type->add_option("--fuel", fuel);
  type->add_option("--emit-derivation", emit, "write the derivation as JSON");

  auto* check = app.add_subcommand("check-derivation", "validate a derivation file");
  check->add_option("file", deriv_file)->required();

  auto* props = app.add_subcommand("props", "run a property suite over enumerated terms");
  props->add_option("--suite", suite, "suite name, or 'all'");
  props->add_option("--max-size", opts.max_size);
  props->add_option("--fuel", opts.fuel);
  props->add_option("--bfs-budget", opts.bfs_budget);
  props->add_option("--free-pool", opts.free_pool, "free variable names");
  props->add_flag("--json", as_json);

  auto* demo = app.add_subcommand("demo", "replay a worked example");
  demo->add_option("name", demo_name);
  demo->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(term_text, strategy, fuel, trace, as_json);
    if (classify->parsed()) return cmd_classify(term_text);
    if (type->parsed()) return cmd_type(term_text, mode, fuel, emit);
    if (check->parsed()) return cmd_check_derivation(deriv_file);
    if (props->parsed()) return cmd_props(suite, opts, as_json);
    if (demo->parsed()) return cmd_demo(demo_name, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
