#include "vsc/transform.hpp"

#include <stdexcept>

#include "vsc/classify.hpp"
#include "vsc/parser.hpp"

namespace vsc {

namespace {

[[noreturn]] void bail(const std::string& msg) { throw DerivationError(msg); }

void require(bool cond, const std::string& msg) {
  if (!cond) bail(msg);
}

MultiType ground_singleton() { return MultiType::singleton(LinearType::ground()); }

}  // namespace

TypedStep make_typed_step(const TermPtr& before, const Step& step) {
  TermPtr local = resolve(before, step.path);
  std::optional<TermPtr> res;
  switch (step.rule) {
    case RuleTag::M: res = root_m(local); break;
    case RuleTag::E: res = root_e(local); break;
    case RuleTag::BetaV:
    case RuleTag::BetaI:
      if (local->kind == TermKind::App && local->a->kind == TermKind::Lam)
        res = subst(local->a->a, local->a->name, local->b);
      break;
  }
  require(res.has_value(), "step does not fire at its path");
  TermPtr full = replace_at(before, step.path, *res);
  require(alpha_eq(full, step.reduct), "step reduct mismatch");
  return TypedStep{step, before, step.reduct};
}

DerivPtr deriv_rename_free(const DerivPtr& d, const std::string& from, const std::string& to) {
  const Judgment& c = d->conclusion;
  switch (d->rule) {
    case Rule::Ax:
      if (c.subject->name != from) return d;
      return ax_node(to, c.rhs_linear);
    case Rule::Many: {
      std::vector<DerivPtr> prem;
      prem.reserve(d->premises.size());
      for (const auto& p : d->premises) prem.push_back(deriv_rename_free(p, from, to));
      return many_node(rename_free(c.subject, from, to), std::move(prem));
    }
    case Rule::LamRule: {
      if (c.subject->name == from) return d;  // shadowed
      return lam_node(c.subject->name, deriv_rename_free(d->premises[0], from, to));
    }
    case Rule::AppRule:
      return app_node(deriv_rename_free(d->premises[0], from, to),
                      deriv_rename_free(d->premises[1], from, to));
    case Rule::EsRule: {
      DerivPtr subj = deriv_rename_free(d->premises[1], from, to);
      DerivPtr body =
          c.subject->name == from ? d->premises[0] : deriv_rename_free(d->premises[0], from, to);
      return es_node(c.subject->name, std::move(body), std::move(subj));
    }
  }
  return d;
}

namespace {

// Rebuilds the tree with every subject (and so every binder and context
// key) taken from `target`; rule shapes and types come from d. Alpha
// equivalence of the subjects makes the free-variable keys line up.
DerivPtr retarget_rec(const DerivPtr& d, const TermPtr& target) {
  const Judgment& c = d->conclusion;
  switch (d->rule) {
    case Rule::Ax:
      require(target->kind == TermKind::Var, "retarget: shape mismatch at ax");
      return ax_node(target->name, c.rhs_linear);
    case Rule::Many: {
      std::vector<DerivPtr> prem;
      prem.reserve(d->premises.size());
      for (const auto& p : d->premises) prem.push_back(retarget_rec(p, target));
      return many_node(target, std::move(prem));
    }
    case Rule::LamRule:
      require(target->kind == TermKind::Lam, "retarget: shape mismatch at lam");
      return lam_node(target->name, retarget_rec(d->premises[0], target->a));
    case Rule::AppRule:
      require(target->kind == TermKind::App, "retarget: shape mismatch at @");
      return app_node(retarget_rec(d->premises[0], target->a),
                      retarget_rec(d->premises[1], target->b));
    case Rule::EsRule:
      require(target->kind == TermKind::Es, "retarget: shape mismatch at es");
      return es_node(target->name, retarget_rec(d->premises[0], target->a),
                     retarget_rec(d->premises[1], target->b));
  }
  return d;
}

}  // namespace

DerivPtr deriv_retarget(const DerivPtr& d, const TermPtr& target) {
  if (equal(d->conclusion.subject, target)) return d;
  require(alpha_eq(d->conclusion.subject, target), "retarget: subjects not alpha-equivalent");
  return retarget_rec(d, target);
}

DerivPtr empty_value_derivation(const TermPtr& vt) {
  require(is_theoretical_value(vt), "empty_value_derivation: not a theoretical value");
  return many_node(vt, {});
}

std::pair<DerivPtr, DerivPtr> split_value_derivation(const DerivPtr& d, const MultiType& m1,
                                                     const MultiType& m2) {
  check_derivation(d);
  require(d->rule == Rule::Many, "split: expected a many-rooted value typing");
  require(m1.sum(m2) == d->conclusion.rhs_multi, "split: M1 + M2 differs from M");
  MultiType need1 = m1, need2 = m2;
  std::vector<DerivPtr> side1, side2;
  for (const auto& p : d->premises) {
    MultiType a = MultiType::singleton(p->conclusion.rhs_linear);
    if (need1.contains(a)) {
      need1 = need1.minus(a);
      side1.push_back(p);
    } else {
      need2 = need2.minus(a);
      side2.push_back(p);
    }
  }
  return {many_node(d->conclusion.subject, std::move(side1)),
          many_node(d->conclusion.subject, std::move(side2))};
}

DerivPtr merge_value_derivations(const DerivPtr& d1, const DerivPtr& d2) {
  check_derivation(d1);
  check_derivation(d2);
  require(d1->rule == Rule::Many && d2->rule == Rule::Many,
          "merge: expected many-rooted value typings");
  require(equal(d1->conclusion.subject, d2->conclusion.subject), "merge: subject mismatch");
  std::vector<DerivPtr> prem = d1->premises;
  prem.insert(prem.end(), d2->premises.begin(), d2->premises.end());
  return many_node(d1->conclusion.subject, std::move(prem));
}

namespace {

// Recursion mirrors subst case by case so that rebuilt subjects coincide
// with subst's output exactly, renames included.
DerivPtr subst_deriv_rec(const DerivPtr& dt, const std::string& x, const DerivPtr& dv) {
  const TermPtr& t = dt->conclusion.subject;
  if (!free_vars(t).count(x)) return dt;
  const TermPtr& v = dv->conclusion.subject;
  switch (dt->rule) {
    case Rule::Many: {
      if (t->kind == TermKind::Var) return dv;  // t = x
      // t = \y.b with x free in b
      const std::string& y = t->name;
      bool ren = free_vars(v).count(y) > 0;
      std::string y2 = ren ? subst_binder_rename(t->a, y, x, v) : y;
      DerivPtr rest = dv;
      std::vector<DerivPtr> lams;
      lams.reserve(dt->premises.size());
      for (const auto& lamNode : dt->premises) {
        DerivPtr body = lamNode->premises[0];
        MultiType ni = body->conclusion.ctx.get(x);
        auto [share, rem] =
            split_value_derivation(rest, ni, rest->conclusion.rhs_multi.minus(ni));
        rest = rem;
        if (ren) body = deriv_rename_free(body, y, y2);
        lams.push_back(lam_node(y2, subst_deriv_rec(body, x, share)));
      }
      return many_node(subst(t, x, v), std::move(lams));
    }
    case Rule::AppRule: {
      MultiType n1 = dt->premises[0]->conclusion.ctx.get(x);
      auto [dv1, dv2] =
          split_value_derivation(dv, n1, dv->conclusion.rhs_multi.minus(n1));
      return app_node(subst_deriv_rec(dt->premises[0], x, dv1),
                      subst_deriv_rec(dt->premises[1], x, dv2));
    }
    case Rule::EsRule: {
      const std::string& y = t->name;
      if (y == x)
        return es_node(y, dt->premises[0], subst_deriv_rec(dt->premises[1], x, dv));
      MultiType n1 = dt->premises[0]->conclusion.ctx.get(x);
      auto [dv1, dv2] =
          split_value_derivation(dv, n1, dv->conclusion.rhs_multi.minus(n1));
      DerivPtr body = dt->premises[0];
      std::string y2 = y;
      if (free_vars(v).count(y) && free_vars(t->a).count(x)) {
        y2 = subst_binder_rename(t->a, y, x, v);
        body = deriv_rename_free(body, y, y2);
      }
      return es_node(y2, subst_deriv_rec(body, x, dv1),
                     subst_deriv_rec(dt->premises[1], x, dv2));
    }
    default:
      bail("substitute_derivation: expected a multi judgment derivation");
  }
}

}  // namespace

DerivPtr substitute_derivation(const DerivPtr& dt, const std::string& x, const DerivPtr& dv) {
  check_derivation(dt);
  check_derivation(dv);
  require(dt->conclusion.rhs_is_multi, "substitute_derivation: dt must conclude a multi type");
  require(is_value(dv->conclusion.subject), "substitute_derivation: v must be a value");
  require(dt->conclusion.ctx.get(x) == dv->conclusion.rhs_multi,
          "substitute_derivation: N mismatch between x's entry and v's type");
  return subst_deriv_rec(dt, x, dv);
}

namespace {

std::pair<DerivPtr, DerivPtr> anti_rec(const DerivPtr& d, const TermPtr& t, const std::string& x,
                                       const TermPtr& v) {
  if (!free_vars(t).count(x)) return {d, empty_value_derivation(v)};
  switch (t->kind) {
    case TermKind::Var: {  // t = x
      std::vector<DerivPtr> axs;
      for (const auto& a : d->conclusion.rhs_multi.elems()) axs.push_back(ax_node(x, a));
      return {many_node(var(x), std::move(axs)), d};
    }
    case TermKind::App: {
      require(d->rule == Rule::AppRule, "anti_substitute: derivation shape mismatch at @");
      auto [p1, t1] = anti_rec(d->premises[0], t->a, x, v);
      auto [p2, t2] = anti_rec(d->premises[1], t->b, x, v);
      return {app_node(p1, p2), merge_value_derivations(t1, t2)};
    }
    case TermKind::Lam: {
      require(d->rule == Rule::Many, "anti_substitute: derivation shape mismatch at lam");
      const std::string& y = t->name;
      bool ren = free_vars(v).count(y) > 0;
      std::string y2 = ren ? subst_binder_rename(t->a, y, x, v) : y;
      TermPtr b2 = ren ? rename_free(t->a, y, y2) : t->a;
      std::vector<DerivPtr> lams;
      std::vector<DerivPtr> thetas;
      for (const auto& lamNode : d->premises) {
        auto [pi, ti] = anti_rec(lamNode->premises[0], b2, x, v);
        lams.push_back(lam_node(y2, pi));
        thetas.push_back(ti);
      }
      DerivPtr theta = empty_value_derivation(v);
      for (auto& ti : thetas) theta = merge_value_derivations(theta, ti);
      return {many_node(lam(y2, b2), std::move(lams)), theta};
    }
    case TermKind::Es: {
      require(d->rule == Rule::EsRule, "anti_substitute: derivation shape mismatch at es");
      const std::string& y = t->name;
      auto [p2, t2] = anti_rec(d->premises[1], t->b, x, v);
      if (y == x) return {es_node(y, d->premises[0], p2), t2};
      std::string y2 = y;
      TermPtr b2 = t->a;
      if (free_vars(v).count(y) && free_vars(t->a).count(x)) {
        y2 = subst_binder_rename(t->a, y, x, v);
        b2 = rename_free(t->a, y, y2);
      }
      auto [p1, t1] = anti_rec(d->premises[0], b2, x, v);
      return {es_node(y2, p1, p2), merge_value_derivations(t1, t2)};
    }
  }
  bail("anti_substitute: unreachable");
}

}  // namespace

std::pair<DerivPtr, DerivPtr> anti_substitute(const DerivPtr& d, const TermPtr& t,
                                              const std::string& x, const TermPtr& v) {
  check_derivation(d);
  require(d->conclusion.rhs_is_multi, "anti_substitute: d must conclude a multi type");
  require(is_value(v), "anti_substitute: v must be a value");
  TermPtr expected = subst(t, x, v);
  require(alpha_eq(d->conclusion.subject, expected),
          "anti_substitute: subject not alpha-equal to t{x<-v}");
  DerivPtr d0 = deriv_retarget(d, expected);
  auto [psi, theta] = anti_rec(d0, t, x, v);
  if (!equal(psi->conclusion.subject, t)) psi = deriv_retarget(psi, t);
  return {psi, theta};
}

namespace {

// Renames the leading ES-stack binders of a derivation to the names the
// rewrite analysis picked, outermost first.
DerivPtr rename_chain(const DerivPtr& d, const std::vector<EsLayer>& layers, std::size_t j) {
  if (j == layers.size()) return d;
  require(d->rule == Rule::EsRule, "derivation/answer shape mismatch");
  DerivPtr body = d->premises[0];
  const std::string& cur = d->conclusion.subject->name;
  if (cur != layers[j].binder) body = deriv_rename_free(body, cur, layers[j].binder);
  body = rename_chain(body, layers, j + 1);
  return es_node(layers[j].binder, body, d->premises[1]);
}

struct PeeledChain {
  std::vector<std::pair<std::string, DerivPtr>> spine;  // binder, subject premise
  DerivPtr core;
};

PeeledChain peel_chain(DerivPtr d, std::size_t k) {
  PeeledChain out;
  for (std::size_t j = 0; j < k; ++j) {
    require(d->rule == Rule::EsRule, "derivation/answer shape mismatch");
    out.spine.push_back({d->conclusion.subject->name, d->premises[1]});
    d = d->premises[0];
  }
  out.core = d;
  return out;
}

DerivPtr wrap_chain(const PeeledChain& chain, DerivPtr inner) {
  for (auto it = chain.spine.rbegin(); it != chain.spine.rend(); ++it)
    inner = es_node(it->first, std::move(inner), it->second);
  return inner;
}

DerivPtr reduce_root(const DerivPtr& node, RuleTag rule) {
  if (rule == RuleTag::M) {
    require(node->rule == Rule::AppRule, "subject/step mismatch: m-step off an application");
    auto analysis = analyze_root_m(node->conclusion.subject);
    require(analysis.has_value(), "subject/step mismatch: no m-redex here");
    DerivPtr fun = rename_chain(node->premises[0], analysis->layers, 0);
    PeeledChain chain = peel_chain(fun, analysis->layers.size());
    require(chain.core->rule == Rule::Many && chain.core->premises.size() == 1 &&
                chain.core->premises[0]->rule == Rule::LamRule,
            "left premise is not a singleton abstraction typing");
    DerivPtr body = chain.core->premises[0]->premises[0];
    DerivPtr inner = es_node(analysis->binder, body, node->premises[1]);
    return wrap_chain(chain, std::move(inner));
  }
  require(node->rule == Rule::EsRule, "subject/step mismatch: e-step off an ES");
  auto analysis = analyze_root_e(node->conclusion.subject);
  require(analysis.has_value(), "subject/step mismatch: no e-redex here");
  DerivPtr subj = rename_chain(node->premises[1], analysis->layers, 0);
  PeeledChain chain = peel_chain(subj, analysis->layers.size());
  DerivPtr inner =
      substitute_derivation(node->premises[0], node->conclusion.subject->name, chain.core);
  return wrap_chain(chain, std::move(inner));
}

DerivPtr expand_root(const DerivPtr& node, const TermPtr& before_sub, RuleTag rule) {
  if (rule == RuleTag::M) {
    require(before_sub->kind == TermKind::App, "subject/step mismatch: m-expansion off an application");
    std::vector<EsLayer> layers;
    TermPtr lamCore;
    require(peel_answer(before_sub->a, layers, lamCore), "m-expansion: head is not an answer");
    PeeledChain chain = peel_chain(node, layers.size());
    require(chain.core->rule == Rule::EsRule, "m-expansion: missing the created ES");
    DerivPtr body = chain.core->premises[0];
    DerivPtr arg = chain.core->premises[1];
    const std::string& binder = chain.core->conclusion.subject->name;
    DerivPtr many = many_node(lam(binder, body->conclusion.subject),
                              {lam_node(binder, body)});
    return app_node(wrap_chain(chain, std::move(many)), arg);
  }
  require(before_sub->kind == TermKind::Es, "subject/step mismatch: e-expansion off an ES");
  auto analysis = analyze_root_e(before_sub);
  require(analysis.has_value(), "e-expansion: before-term has no e-redex");
  PeeledChain chain = peel_chain(node, analysis->layers.size());
  auto [psi, theta] =
      anti_substitute(chain.core, analysis->body, analysis->binder, analysis->value);
  return es_node(analysis->binder, psi, wrap_chain(chain, theta));
}

enum class WalkDir { Reduce, Expand };

// Walks the derivation along the step path, rebuilding the spine; conclusion
// contexts and types are untouched, subjects change along the spine only.
DerivPtr walk(const DerivPtr& node, const TypedStep& s, std::size_t i, const TermPtr& target_sub,
              WalkDir dir) {
  const Path& path = s.step.path;
  if (i == path.size()) {
    if (dir == WalkDir::Reduce) return reduce_root(node, s.step.rule);
    return expand_root(node, target_sub, s.step.rule);
  }
  Move mv = path[i];
  switch (node->rule) {
    case Rule::Many: {
      require(mv == Move::LamBody && node->conclusion.subject->kind == TermKind::Lam,
              "subject/step mismatch along the path");
      std::vector<DerivPtr> lams;
      lams.reserve(node->premises.size());
      for (const auto& lamNode : node->premises) {
        require(lamNode->rule == Rule::LamRule, "many over a lam subject needs lam premises");
        lams.push_back(lam_node(lamNode->conclusion.subject->name,
                                walk(lamNode->premises[0], s, i + 1, target_sub->a, dir)));
      }
      if (lams.empty()) return many_node(target_sub, {});
      TermPtr subj = lams.front()->conclusion.subject;
      return many_node(std::move(subj), std::move(lams));
    }
    case Rule::AppRule: {
      if (mv == Move::AppL)
        return app_node(walk(node->premises[0], s, i + 1, target_sub->a, dir), node->premises[1]);
      require(mv == Move::AppR, "subject/step mismatch along the path");
      return app_node(node->premises[0], walk(node->premises[1], s, i + 1, target_sub->b, dir));
    }
    case Rule::EsRule: {
      if (mv == Move::EsBody)
        return es_node(node->conclusion.subject->name,
                       walk(node->premises[0], s, i + 1, target_sub->a, dir), node->premises[1]);
      require(mv == Move::EsSubject, "subject/step mismatch along the path");
      return es_node(node->conclusion.subject->name, node->premises[0],
                     walk(node->premises[1], s, i + 1, target_sub->b, dir));
    }
    default:
      bail("subject/step mismatch along the path");
  }
}

void require_vsc_step(const TypedStep& s) {
  require(s.step.rule == RuleTag::M || s.step.rule == RuleTag::E,
          "derivation transport needs an m- or e-step");
}

}  // namespace

DerivPtr subject_reduce(const DerivPtr& d, const TypedStep& s) {
  check_derivation(d);
  require(d->conclusion.rhs_is_multi, "subject_reduce: d must conclude a multi type");
  require_vsc_step(s);
  require(alpha_eq(d->conclusion.subject, s.before), "subject_reduce: subject/step mismatch");
  DerivPtr d0 = deriv_retarget(d, s.before);
  DerivPtr out = walk(d0, s, 0, s.after, WalkDir::Reduce);
  if (!equal(out->conclusion.subject, s.after)) out = deriv_retarget(out, s.after);
  return out;
}

DerivPtr subject_expand(const DerivPtr& d, const TypedStep& s) {
  check_derivation(d);
  require(d->conclusion.rhs_is_multi, "subject_expand: d must conclude a multi type");
  require_vsc_step(s);
  require(alpha_eq(d->conclusion.subject, s.after), "subject_expand: subject/step mismatch");
  DerivPtr d0 = deriv_retarget(d, s.after);
  DerivPtr out = walk(d0, s, 0, s.before, WalkDir::Expand);
  if (!equal(out->conclusion.subject, s.before)) out = deriv_retarget(out, s.before);
  return out;
}

DerivPtr type_inert_open(const TermPtr& inert, const MultiType& m) {
  require(is_inert(inert), "type_inert_open: not an inert term");
  switch (inert->kind) {
    case TermKind::Var: {
      std::vector<DerivPtr> axs;
      for (const auto& a : m.elems()) axs.push_back(ax_node(inert->name, a));
      return many_node(inert, std::move(axs));
    }
    case TermKind::App: {
      DerivPtr arg = type_fireball_open(inert->b);
      DerivPtr head =
          type_inert_open(inert->a, MultiType::singleton(LinearType::arrow(MultiType(), m)));
      return app_node(std::move(head), std::move(arg));
    }
    case TermKind::Es: {
      DerivPtr body = type_inert_open(inert->a, m);
      MultiType n = body->conclusion.ctx.get(inert->name);
      DerivPtr subj = type_inert_open(inert->b, n);
      return es_node(inert->name, std::move(body), std::move(subj));
    }
    default:
      bail("type_inert_open: unreachable");
  }
}

DerivPtr type_fireball_open(const TermPtr& fireball) {
  require(is_fireball(fireball), "type_fireball_open: not a fireball");
  if (is_inert(fireball)) return type_inert_open(fireball, MultiType());
  if (fireball->kind == TermKind::Lam) return empty_value_derivation(fireball);
  // ES carrying a fireball body over an inert subject
  DerivPtr body = type_fireball_open(fireball->a);
  MultiType n = body->conclusion.ctx.get(fireball->name);
  DerivPtr subj = type_inert_open(fireball->b, n);
  return es_node(fireball->name, std::move(body), std::move(subj));
}

DerivPtr type_inert_shrinking(const TermPtr& inert, const MultiType& m) {
  require(is_strong_inert(inert), "type_inert_shrinking: not a strong inert term");
  require(is_left(m), "type_inert_shrinking: M must be left");
  switch (inert->kind) {
    case TermKind::Var: {
      std::vector<DerivPtr> axs;
      for (const auto& a : m.elems()) axs.push_back(ax_node(inert->name, a));
      return many_node(inert, std::move(axs));
    }
    case TermKind::App: {
      DerivPtr arg = type_fireball_shrinking(inert->b);
      const MultiType& n = arg->conclusion.rhs_multi;
      DerivPtr head =
          type_inert_shrinking(inert->a, MultiType::singleton(LinearType::arrow(n, m)));
      return app_node(std::move(head), std::move(arg));
    }
    case TermKind::Es: {
      DerivPtr body = type_inert_shrinking(inert->a, m);
      MultiType n = body->conclusion.ctx.get(inert->name);
      DerivPtr subj = type_inert_shrinking(inert->b, n);
      return es_node(inert->name, std::move(body), std::move(subj));
    }
    default:
      bail("type_inert_shrinking: unreachable");
  }
}

DerivPtr type_fireball_shrinking(const TermPtr& fireball) {
  require(is_strong_fireball(fireball), "type_fireball_shrinking: not a strong fireball");
  // [G] is both left and right, so the inert case lands on a shrinking type.
  if (is_strong_inert(fireball)) return type_inert_shrinking(fireball, ground_singleton());
  if (fireball->kind == TermKind::Lam) {
    DerivPtr body = type_fireball_shrinking(fireball->a);
    return many_node(fireball, {lam_node(fireball->name, std::move(body))});
  }
  DerivPtr body = type_fireball_shrinking(fireball->a);
  MultiType n = body->conclusion.ctx.get(fireball->name);
  DerivPtr subj = type_inert_shrinking(fireball->b, n);
  return es_node(fireball->name, std::move(body), std::move(subj));
}

InferResult infer(const TermPtr& t, InferMode mode, std::size_t fuel) {
  InferResult out{InferResult::Status::FuelExhausted, nullptr, {}};
  Strategy strat = mode == InferMode::Open ? Strategy::Open : Strategy::External;
  out.outcome = evaluate(t, strat, fuel);
  if (out.outcome.kind == Outcome::Kind::Cycle) {
    out.status = InferResult::Status::CycleDetected;
    return out;
  }
  if (out.outcome.kind == Outcome::Kind::Exhausted) return out;

  DerivPtr d = mode == InferMode::Open ? type_fireball_open(out.outcome.result)
                                       : type_fireball_shrinking(out.outcome.result);
  std::vector<TermPtr> terms = trace_terms(t, out.outcome.trace);
  for (std::size_t i = out.outcome.trace.size(); i-- > 0;) {
    TypedStep ts{out.outcome.trace[i], terms[i], terms[i + 1]};
    d = subject_expand(d, ts);
  }
  out.status = InferResult::Status::Found;
  out.derivation = d;
  return out;
}

}  // namespace vsc
