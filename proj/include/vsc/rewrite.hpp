#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vsc/term.hpp"

namespace vsc {

// The rewrite engine: root rules at a distance,
//   multiplicative  L<\x.t> u  ->  L<t[x <- u]>
//   exponential     t[x <- L<v>]  ->  L<t{x <- v}>
// plus the pure-calculus rules beta_v / beta_i, closed under the evaluation
// contexts of five strategies.

enum class RuleTag { M, E, BetaV, BetaI };
const char* rule_name(RuleTag r);

enum class Strategy { Plotkin, Fire, Open, Vsc, External };
const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& s);

// A located rewrite event. `reduct` is the whole term after firing the rule
// whose redex pattern is rooted at `path`.
struct Step {
  Path path;
  RuleTag rule;
  TermPtr reduct;
};

// One ES layer of a substitution context L, outermost first.
struct EsLayer {
  std::string binder;
  TermPtr subject;
};

// Decomposes an answer L<v> into its ES stack and core abstraction.
// Returns false if t is not an answer.
bool peel_answer(const TermPtr& t, std::vector<EsLayer>& layers, TermPtr& core);

// Root multiplicative step with its decomposition, binders of L already
// renamed away from fv(arg). Layer binders are outermost first.
struct MRedex {
  std::vector<EsLayer> layers;
  std::string binder;  // the abstraction's
  TermPtr body;
  TermPtr arg;
  TermPtr result;
};

// Root exponential step; layer binders renamed away from fv(body) \ {binder},
// `value` carries those renames (it sits under the layers).
struct ERedex {
  std::string binder;  // the ES's
  TermPtr body;
  std::vector<EsLayer> layers;
  TermPtr value;
  TermPtr result;
};

std::optional<MRedex> analyze_root_m(const TermPtr& t);
std::optional<ERedex> analyze_root_e(const TermPtr& t);

std::optional<TermPtr> root_m(const TermPtr& t);
std::optional<TermPtr> root_e(const TermPtr& t);

// The complete list of one-step reducts permitted by the strategy, ordered
// by document position of the redex pattern root (outer before inner, left
// before right), M before E at equal paths. Plotkin and Fire reject
// non-pure input with std::invalid_argument.
std::vector<Step> redexes(const TermPtr& t, Strategy s);
bool has_redex(const TermPtr& t, Strategy s);

// First redex in the order above; nullopt iff t is s-normal.
std::optional<Step> step(const TermPtr& t, Strategy s);

struct Outcome {
  enum class Kind { Normal, Cycle, Exhausted } kind;
  TermPtr result;                         // Normal only
  std::vector<Step> trace;                // steps taken
  std::size_t loop_start = 0;             // Cycle: index of the recurring term
  std::array<std::size_t, 4> counts{};    // indexed by RuleTag

  std::size_t count(RuleTag r) const { return counts[static_cast<std::size_t>(r)]; }
  bool normal() const { return kind == Kind::Normal; }
};

// Iterates `step` up to `fuel` times. Reports Cycle as soon as the current
// term alpha-equals an earlier term of the trace.
Outcome evaluate(const TermPtr& t, Strategy s, std::size_t fuel);

// The terms of an evaluation: t, then each step's reduct.
std::vector<TermPtr> trace_terms(const TermPtr& t, const std::vector<Step>& steps);

struct DiamondReport {
  std::size_t peaks_checked = 0;
  bool violation = false;
  TermPtr left, right;  // the unjoinable pair, when violation
};

// Checks the one-step diamond at t: every pair of alpha-distinct one-step
// reducts must join in exactly one step.
DiamondReport diamond_check(const TermPtr& t, Strategy s);

// Breadth-first search over s-reducts, visiting at most node_budget
// alpha-distinct terms; returns a normal form if one is found.
std::optional<TermPtr> bfs_normalize(const TermPtr& t, Strategy s, std::size_t node_budget);

struct BfsReport {
  std::vector<TermPtr> normal_forms;  // alpha-distinct
  bool exhausted_budget = false;
  // Length invariance over the explored region: false if some reduct was
  // reached at two different distances from the root.
  bool levels_consistent = true;
};

BfsReport bfs_explore(const TermPtr& t, Strategy s, std::size_t node_budget);

}  // namespace vsc
