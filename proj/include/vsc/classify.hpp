#pragma once

#include <string>
#include <vector>

#include "vsc/term.hpp"

namespace vsc {

// Grammar-defined term classes, each decided by structural recursion.
//
// Open-calculus normal forms:
//   inert     i ::= x | i f | i[x <- i']
//   fireball  f ::= v | i | f[x <- i]
// Strong normal forms:
//   strong inert     is ::= x | is fs | is[x <- is']
//   strong value     vs ::= \x.fs
//   strong fireball  fs ::= is | vs | fs[x <- is]
// Rigid terms: r ::= x | r t | r[x <- r'].
// Answers: a lambda under a stack of ES on the body side.
// Pure-calculus (no ES) classes:
//   fire inert     i ::= x f1 ... fn   (n >= 0)
//   fire fireball  f ::= v | i

bool is_value(const TermPtr& t);
bool is_theoretical_value(const TermPtr& t);

bool is_inert(const TermPtr& t);
bool is_fireball(const TermPtr& t);

bool is_strong_inert(const TermPtr& t);
bool is_strong_value(const TermPtr& t);
bool is_strong_fireball(const TermPtr& t);

bool is_rigid(const TermPtr& t);
bool is_answer(const TermPtr& t);

// Throw std::invalid_argument on terms containing ES.
bool is_fire_inert(const TermPtr& t);
bool is_fire_fireball(const TermPtr& t);

struct ClassEntry {
  std::string name;
  bool value;
};

// All classes of t, in a fixed order; fire classes are reported only for
// pure terms.
std::vector<ClassEntry> classify_all(const TermPtr& t);

}  // namespace vsc
