#pragma once

#include <functional>
#include <vector>

#include "vsc/term.hpp"

namespace vsc {

// Exhaustive term enumeration, one representative per alpha-class, in a
// deterministic order: by size, then document order of constructions
// (Var < Lam < App < Es), variables in scope order before pool order.
// Binders are drawn from the canonical bound-name sequence a, b, c, ...
// (skipping pool names), so emitted terms are already in canonical form.
//
// Size is the node count; emitted terms have size <= max_size.

struct EnumOptions {
  std::size_t max_size = 7;
  std::vector<std::string> free_pool;
  bool pure_only = false;
};

// Calls fn for each term; stops early if fn returns false.
void enumerate_terms(const EnumOptions& opts, const std::function<bool(const TermPtr&)>& fn);

std::vector<TermPtr> enumerate_all(const EnumOptions& opts);

}  // namespace vsc
