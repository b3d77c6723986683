#pragma once

#include <optional>
#include <string>
#include <utility>

#include "vsc/derivation.hpp"
#include "vsc/rewrite.hpp"
#include "vsc/term.hpp"

namespace vsc {

// Derivation-to-derivation constructions: substitution and anti-substitution
// on derivations, splitting/merging of value typings, subject reduction and
// expansion along a located step, typings of normal forms, and the
// evaluate-then-expand inference pipeline.

// A step together with the terms it connects.
struct TypedStep {
  Step step;
  TermPtr before;
  TermPtr after;
};

// Validates that `step` fires in `before` and reproduces its reduct.
TypedStep make_typed_step(const TermPtr& before, const Step& step);

// Transports a derivation onto an alpha-equivalent subject: binders in
// subjects and the context entries they govern are renamed to match
// `target`. Throws if the subjects are not alpha-equivalent.
DerivPtr deriv_retarget(const DerivPtr& d, const TermPtr& target);

// Renames a free variable in a derivation's subject and context entries.
// `to` must occur nowhere in d.
DerivPtr deriv_rename_free(const DerivPtr& d, const std::string& from, const std::string& to);

// |- vt : 0 by a zero-premise many; size 0.
DerivPtr empty_value_derivation(const TermPtr& vt);

// Splits a value typing along M = M1 + M2; first occurrences go to the M1
// side. Sizes add up. Requires d to conclude a theoretical-value judgment
// of type M1 + M2.
std::pair<DerivPtr, DerivPtr> split_value_derivation(const DerivPtr& d, const MultiType& m1,
                                                     const MultiType& m2);

// Concatenates two value typings of the same subject; contexts and types sum.
DerivPtr merge_value_derivations(const DerivPtr& d1, const DerivPtr& d2);

// Given dt |> G, x:N |- t : M and dv |> D |- v : N (v a value), builds
// |> G + D |- t{x <- v} : M with size <= |dt| + |dv|.
DerivPtr substitute_derivation(const DerivPtr& dt, const std::string& x, const DerivPtr& dv);

// Inverse direction: from d |> G |- t{x <- v} : M recovers
// psi |> D, x:N |- t : M and theta |> S |- v : N with G = D + S.
std::pair<DerivPtr, DerivPtr> anti_substitute(const DerivPtr& d, const TermPtr& t,
                                              const std::string& x, const TermPtr& v);

// Subject reduction: same conclusion context and type, subject moves from
// s.before to s.after; the size never increases, and strictly decreases for
// open steps and for external steps from a shrinking derivation.
DerivPtr subject_reduce(const DerivPtr& d, const TypedStep& s);

// Subject expansion: same conclusion, subject moves back to s.before.
DerivPtr subject_expand(const DerivPtr& d, const TypedStep& s);

// Typability of open normal forms: any multi type for inert terms, 0 for
// fireballs.
DerivPtr type_inert_open(const TermPtr& inert, const MultiType& m);
DerivPtr type_fireball_open(const TermPtr& fireball);

// Shrinking typability of strong normal forms: left multi types for strong
// inert terms (left context), a shrinking derivation for strong fireballs.
DerivPtr type_inert_shrinking(const TermPtr& inert, const MultiType& m);
DerivPtr type_fireball_shrinking(const TermPtr& fireball);

enum class InferMode { Open, Shrinking };

struct InferResult {
  enum class Status { Found, CycleDetected, FuelExhausted } status;
  DerivPtr derivation;  // when Found
  Outcome outcome;      // the evaluation that drove the search

  bool found() const { return status == Status::Found; }
};

// Evaluates t (Open mode: open strategy; Shrinking mode: external strategy),
// types the normal form, and pulls the derivation back along the trace by
// subject expansion. Absence of a derivation is a typability disproof only
// when the evaluation cycled.
InferResult infer(const TermPtr& t, InferMode mode, std::size_t fuel);

}  // namespace vsc
