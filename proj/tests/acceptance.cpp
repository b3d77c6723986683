// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Population: closed terms and terms over one free variable, size <= 7,
// fuel 200, BFS budget 5000.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "vsc/harness.hpp"
#include "vsc/parser.hpp"
#include "vsc/transform.hpp"

using namespace vsc;

namespace {

int failures_total = 0;

void report(int n, const std::string& what, bool pass, const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", n, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) failures_total++;
}

SuiteOptions desk_scale() {
  SuiteOptions o;
  o.max_size = 7;
  o.free_pool = {"y"};
  o.fuel = 200;
  o.bfs_budget = 5000;
  return o;
}

std::string suite_detail(const SuiteReport& r) {
  std::string s = "population=" + std::to_string(r.population) +
                  " checked=" + std::to_string(r.checked) +
                  " failures=" + std::to_string(r.failures);
  if (r.skipped > 0) s += " undecided=" + std::to_string(r.skipped);
  if (r.failures > 0) s += " first: " + r.counterexample + " (" + r.details + ")";
  return s;
}

bool clean(const SuiteReport& r) { return r.failures == 0; }

}  // namespace

int main() {
  SuiteOptions opts = desk_scale();

  // 1. Exact replays of the worked traces, up to alpha, under a second.
  {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string bad;
    for (const auto& name : experiment_names()) {
      ExperimentReport r = run_experiment(name);
      if (!r.passed) {
        ok = false;
        for (const auto& line : r.log)
          if (line.rfind("FAIL", 0) == 0) bad += " [" + name + "] " + line;
      }
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    ok = ok && ms < 1000.0;
    report(1, "worked-example replays (6 experiments)", ok,
           bad.empty() ? std::to_string(static_cast<long>(ms)) + " ms" : bad);
  }

  // 2. Harmony: classifiers agree with redex-search emptiness.
  {
    SuiteReport open = run_suite("harmony-open", opts);
    SuiteReport strong = run_suite("harmony-strong", opts);
    SuiteReport fire = run_suite("harmony-fire", opts);
    bool ok = clean(open) && clean(strong) && clean(fire);
    report(2, "harmony for open, strong and fire normal forms", ok,
           ok ? suite_detail(open)
              : suite_detail(open) + " | " + suite_detail(strong) + " | " + suite_detail(fire));
  }

  // 3. Diamond for open and external; vsc exhibits an unjoinable peak.
  {
    SuiteReport open = run_suite("diamond-open", opts);
    SuiteReport ext = run_suite("diamond-external", opts);
    SuiteReport witness = run_suite("vsc-not-diamond", opts);
    bool ok = clean(open) && clean(ext) && clean(witness);
    report(3, "diamond property (open, external) and the vsc counterexample", ok,
           suite_detail(open) + " | external " + suite_detail(ext) +
               (clean(witness) ? " | vsc peak found" : " | vsc peak NOT found"));
  }

  // 4. Fullness: x-normal iff vsc-normal.
  {
    SuiteReport r = run_suite("fullness", opts);
    report(4, "fullness: external-normal coincides with vsc-normal", clean(r), suite_detail(r));
  }

  // 5. Open subject reduction: strict size decrease and |d| <= |Phi|.
  {
    SuiteReport r = run_suite("subject-reduction-open", opts);
    SuiteReport lb = run_suite("length-bound", opts);
    report(5, "open subject reduction with the length bound", clean(r) && clean(lb),
           suite_detail(r));
  }

  // 6. Shrinking subject reduction, plus the two divergence witnesses.
  {
    SuiteReport r = run_suite("subject-reduction-shrinking", opts);
    InferResult a =
        infer(parse("(\\x.\\i.i) (y (\\z.(\\d.d d) (\\d.d d)))"), InferMode::Shrinking, 500);
    InferResult b = infer(parse("x (\\y.(\\d.d d) (\\d.d d))"), InferMode::Shrinking, 500);
    bool cycles = a.status == InferResult::Status::CycleDetected &&
                  b.status == InferResult::Status::CycleDetected;
    report(6, "shrinking subject reduction; divergent witnesses cycle", clean(r) && cycles,
           suite_detail(r) + (cycles ? " | both witnesses cycle" : " | witnesses did NOT cycle"));
  }

  // 7. Subject expansion and completeness.
  {
    SuiteReport r = run_suite("subject-expansion", opts);
    report(7, "subject expansion along recorded evaluations", clean(r), suite_detail(r));
  }

  // 8. Untyped normalization.
  {
    SuiteReport r = run_suite("untyped-normalization", opts);
    report(8, "untyped normalization: external reaches every bfs-found normal form", clean(r),
           suite_detail(r));
  }

  // 9. Derivation-construction contracts: substitution bound, split/merge,
  //    anti-substitution round trip, spreading.
  {
    SuiteReport sub = run_suite("substitution-bound", opts);
    SuiteReport spr = run_suite("spreading", opts);
    report(9, "substitution/anti-substitution, split/merge, spreading", clean(sub) && clean(spr),
           suite_detail(sub) + " | spreading " + suite_detail(spr));
  }

  // 10. Plotkin simulation by m;e pairs.
  {
    SuiteReport r = run_suite("plotkin-simulation", opts);
    report(10, "every beta_v step factors as m;e up to alpha", clean(r), suite_detail(r));
  }

  if (failures_total == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures_total);
  return 1;
}
