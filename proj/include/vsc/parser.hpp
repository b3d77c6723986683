#pragma once

#include <stdexcept>
#include <string>

#include "vsc/term.hpp"

namespace vsc {

// Concrete syntax:
//   term     ::= lam | app
//   lam      ::= ('\' | 'λ') ident '.' term
//   app      ::= app suffixed | suffixed
//   suffixed ::= atom | suffixed '[' ident '<-' term ']'
//   atom     ::= ident | '(' term ')'
// Application is left-associative, a lambda body extends as far right as
// possible, and an ES suffix binds tighter than application.

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col)),
        line(line_), column(col) {}
};

TermPtr parse(const std::string& text);

std::string print(const TermPtr& t);
// Every non-atom wrapped in parentheses; used by golden tests.
std::string print_full(const TermPtr& t);

}  // namespace vsc
