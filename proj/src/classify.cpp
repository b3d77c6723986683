#include "vsc/classify.hpp"

#include <stdexcept>

namespace vsc {

bool is_value(const TermPtr& t) { return t->kind == TermKind::Lam; }

bool is_theoretical_value(const TermPtr& t) {
  return t->kind == TermKind::Var || t->kind == TermKind::Lam;
}

bool is_inert(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Lam: return false;
    case TermKind::App: return is_inert(t->a) && is_fireball(t->b);
    case TermKind::Es: return is_inert(t->a) && is_inert(t->b);
  }
  return false;
}

bool is_fireball(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Lam: return true;
    case TermKind::App: return is_inert(t);
    case TermKind::Es: return is_fireball(t->a) && is_inert(t->b);
  }
  return false;
}

bool is_strong_inert(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Lam: return false;
    case TermKind::App: return is_strong_inert(t->a) && is_strong_fireball(t->b);
    case TermKind::Es: return is_strong_inert(t->a) && is_strong_inert(t->b);
  }
  return false;
}

bool is_strong_value(const TermPtr& t) {
  return t->kind == TermKind::Lam && is_strong_fireball(t->a);
}

bool is_strong_fireball(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Lam: return is_strong_value(t);
    case TermKind::App: return is_strong_inert(t);
    case TermKind::Es: return is_strong_fireball(t->a) && is_strong_inert(t->b);
  }
  return false;
}

bool is_rigid(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Lam: return false;
    case TermKind::App: return is_rigid(t->a);
    case TermKind::Es: return is_rigid(t->a) && is_rigid(t->b);
  }
  return false;
}

bool is_answer(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Lam: return true;
    case TermKind::Es: return is_answer(t->a);
    default: return false;
  }
}

namespace {

void require_pure(const TermPtr& t) {
  if (!is_pure(t)) throw std::invalid_argument("fire classes are defined on pure terms only");
}

bool fire_inert_rec(const TermPtr& t);

bool fire_fireball_rec(const TermPtr& t) {
  return t->kind == TermKind::Lam || fire_inert_rec(t);
}

bool fire_inert_rec(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::App: return fire_inert_rec(t->a) && fire_fireball_rec(t->b);
    default: return false;
  }
}

}  // namespace

bool is_fire_inert(const TermPtr& t) {
  require_pure(t);
  return fire_inert_rec(t);
}

bool is_fire_fireball(const TermPtr& t) {
  require_pure(t);
  return fire_fireball_rec(t);
}

std::vector<ClassEntry> classify_all(const TermPtr& t) {
  std::vector<ClassEntry> out = {
      {"value", is_value(t)},
      {"theoretical-value", is_theoretical_value(t)},
      {"inert", is_inert(t)},
      {"fireball", is_fireball(t)},
      {"strong-inert", is_strong_inert(t)},
      {"strong-value", is_strong_value(t)},
      {"strong-fireball", is_strong_fireball(t)},
      {"rigid", is_rigid(t)},
      {"answer", is_answer(t)},
  };
  if (is_pure(t)) {
    out.push_back({"fire-inert", is_fire_inert(t)});
    out.push_back({"fire-fireball", is_fire_fireball(t)});
  }
  return out;
}

}  // namespace vsc
