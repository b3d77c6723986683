#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsc/term.hpp"
#include "vsc/types.hpp"

namespace vsc {

// Typing derivations for the call-by-value multi type system:
//
//   ----------------- ax        G |- t:[M-oN]   D |- u:M
//   x:[A] |- x : A               ----------------------- @
//                                    G+D |- t u : N
//
//   G, x:M |- t : N              G, x:M |- t:N   D |- u:M
//   --------------------- lam    ------------------------ es
//   G |- \x.t : M -o N             G+D |- t[x <- u] : N
//
//   (G_i |- vt : A_i)_i
//   ------------------------- many     (vt a variable or abstraction)
//   +G_i |- vt : [A_i]_i
//
// ax and lam conclude a linear type, consumed only by many; the other rules
// conclude multi types. Judgments carry an explicit rhs kind for this.

enum class Rule { Ax, AppRule, LamRule, EsRule, Many };
const char* rule_label(Rule r);

struct Judgment {
  TypeContext ctx;
  TermPtr subject;
  bool rhs_is_multi = true;
  MultiType rhs_multi;
  LinearType rhs_linear;

  static Judgment multi(TypeContext c, TermPtr t, MultiType m) {
    Judgment j;
    j.ctx = std::move(c);
    j.subject = std::move(t);
    j.rhs_multi = std::move(m);
    return j;
  }
  static Judgment linear(TypeContext c, TermPtr t, LinearType a) {
    Judgment j;
    j.ctx = std::move(c);
    j.subject = std::move(t);
    j.rhs_is_multi = false;
    j.rhs_linear = std::move(a);
    return j;
  }
};

bool same_judgment(const Judgment& a, const Judgment& b);
std::string to_string(const Judgment& j);

struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Rule rule;
  std::vector<DerivPtr> premises;
  Judgment conclusion;
};

DerivPtr make_deriv(Rule rule, std::vector<DerivPtr> premises, Judgment conclusion);

// Node constructors that compute the conclusion from the premises; they do
// not validate their inputs (check_derivation does).
DerivPtr ax_node(const std::string& x, LinearType a);
DerivPtr app_node(DerivPtr fun, DerivPtr arg);
DerivPtr lam_node(const std::string& binder, DerivPtr body);
DerivPtr es_node(const std::string& binder, DerivPtr body, DerivPtr subject);
DerivPtr many_node(TermPtr subject, std::vector<DerivPtr> premises);

struct DerivationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verifies every node against its rule; returns the root conclusion.
// Throws DerivationError naming the first failing rule and mismatch.
Judgment check_derivation(const DerivPtr& d);
bool is_valid(const DerivPtr& d);

// Rule occurrences excluding many (the termination measure).
std::size_t deriv_size(const DerivPtr& d);

// Shrinking: the conclusion context is left and the rhs is a right multi
// type. Inspects only the final judgment.
bool is_shrinking(const DerivPtr& d);

// JSON encoding (nlohmann syntax trees kept out of the public header).
std::string derivation_to_json(const DerivPtr& d);
DerivPtr derivation_from_json(const std::string& text);

}  // namespace vsc
