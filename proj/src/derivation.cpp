#include "vsc/derivation.hpp"

#include <json.hpp>

#include "vsc/classify.hpp"
#include "vsc/parser.hpp"

namespace vsc {

const char* rule_label(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::AppRule: return "@";
    case Rule::LamRule: return "lam";
    case Rule::EsRule: return "es";
    case Rule::Many: return "many";
  }
  return "?";
}

bool same_judgment(const Judgment& a, const Judgment& b) {
  if (a.rhs_is_multi != b.rhs_is_multi) return false;
  if (a.rhs_is_multi ? !(a.rhs_multi == b.rhs_multi) : !(a.rhs_linear == b.rhs_linear))
    return false;
  return a.ctx == b.ctx && equal(a.subject, b.subject);
}

std::string to_string(const Judgment& j) {
  std::string out = to_string(j.ctx);
  if (!out.empty()) out += ' ';
  out += "|- " + print(j.subject) + " : ";
  out += j.rhs_is_multi ? to_string(j.rhs_multi) : to_string(j.rhs_linear);
  return out;
}

DerivPtr make_deriv(Rule rule, std::vector<DerivPtr> premises, Judgment conclusion) {
  return std::make_shared<Derivation>(Derivation{rule, std::move(premises), std::move(conclusion)});
}

DerivPtr ax_node(const std::string& x, LinearType a) {
  TypeContext ctx;
  ctx.set(x, MultiType::singleton(a));
  return make_deriv(Rule::Ax, {}, Judgment::linear(std::move(ctx), var(x), a));
}

DerivPtr app_node(DerivPtr fun, DerivPtr arg) {
  const MultiType& fm = fun->conclusion.rhs_multi;
  MultiType rhs;  // stays 0 when the left premise is not a singleton arrow
  if (fm.count() == 1 && fm.elems().front().is_arrow()) rhs = fm.elems().front().right();
  Judgment c = Judgment::multi(fun->conclusion.ctx.sum(arg->conclusion.ctx),
                               app(fun->conclusion.subject, arg->conclusion.subject),
                               std::move(rhs));
  return make_deriv(Rule::AppRule, {std::move(fun), std::move(arg)}, std::move(c));
}

DerivPtr lam_node(const std::string& binder, DerivPtr body) {
  MultiType dom = body->conclusion.ctx.get(binder);
  Judgment c = Judgment::linear(body->conclusion.ctx.without(binder),
                                lam(binder, body->conclusion.subject),
                                LinearType::arrow(dom, body->conclusion.rhs_multi));
  return make_deriv(Rule::LamRule, {std::move(body)}, std::move(c));
}

DerivPtr es_node(const std::string& binder, DerivPtr body, DerivPtr subject) {
  Judgment c = Judgment::multi(
      body->conclusion.ctx.without(binder).sum(subject->conclusion.ctx),
      es(body->conclusion.subject, binder, subject->conclusion.subject),
      body->conclusion.rhs_multi);
  return make_deriv(Rule::EsRule, {std::move(body), std::move(subject)}, std::move(c));
}

DerivPtr many_node(TermPtr subject, std::vector<DerivPtr> premises) {
  TypeContext ctx;
  std::vector<LinearType> types;
  for (const auto& p : premises) {
    ctx = ctx.sum(p->conclusion.ctx);
    types.push_back(p->conclusion.rhs_linear);
  }
  Judgment c = Judgment::multi(std::move(ctx), std::move(subject), MultiType(std::move(types)));
  return make_deriv(Rule::Many, std::move(premises), std::move(c));
}

namespace {

[[noreturn]] void fail(const DerivPtr& d, const std::string& msg) {
  throw DerivationError(std::string(rule_label(d->rule)) + ": " + msg + " (at " +
                        to_string(d->conclusion) + ")");
}

void check_node(const DerivPtr& d) {
  const Judgment& c = d->conclusion;
  switch (d->rule) {
    case Rule::Ax: {
      if (!d->premises.empty()) fail(d, "ax takes no premises");
      if (c.rhs_is_multi) fail(d, "rhs-kind mismatch: ax concludes a linear type");
      if (c.subject->kind != TermKind::Var) fail(d, "subject mismatch: ax types a variable");
      TypeContext want;
      want.set(c.subject->name, MultiType::singleton(c.rhs_linear));
      if (!(c.ctx == want)) fail(d, "context mismatch: ax needs x:[A]");
      return;
    }
    case Rule::AppRule: {
      if (d->premises.size() != 2) fail(d, "@ takes two premises");
      const Judgment& f = d->premises[0]->conclusion;
      const Judgment& a = d->premises[1]->conclusion;
      if (!f.rhs_is_multi || !a.rhs_is_multi || !c.rhs_is_multi)
        fail(d, "rhs-kind mismatch: @ works on multi judgments");
      if (c.subject->kind != TermKind::App || !equal(c.subject->a, f.subject) ||
          !equal(c.subject->b, a.subject))
        fail(d, "subject mismatch");
      if (f.rhs_multi.count() != 1 || !f.rhs_multi.elems().front().is_arrow())
        fail(d, "left premise must conclude a singleton [M -o N]");
      const LinearType& arrow = f.rhs_multi.elems().front();
      if (!(arrow.left() == a.rhs_multi)) fail(d, "argument type differs from the arrow domain");
      if (!(arrow.right() == c.rhs_multi)) fail(d, "conclusion type differs from the arrow codomain");
      if (!(c.ctx == f.ctx.sum(a.ctx))) fail(d, "context-sum mismatch");
      return;
    }
    case Rule::LamRule: {
      if (d->premises.size() != 1) fail(d, "lam takes one premise");
      const Judgment& p = d->premises[0]->conclusion;
      if (!p.rhs_is_multi || c.rhs_is_multi)
        fail(d, "rhs-kind mismatch: lam concludes a linear type over a multi premise");
      if (c.subject->kind != TermKind::Lam || !equal(c.subject->a, p.subject))
        fail(d, "subject mismatch");
      const std::string& x = c.subject->name;
      if (!c.rhs_linear.is_arrow()) fail(d, "lam concludes an arrow");
      if (!(c.rhs_linear.left() == p.ctx.get(x))) fail(d, "arrow domain differs from x's entry");
      if (!(c.rhs_linear.right() == p.rhs_multi)) fail(d, "arrow codomain differs from premise type");
      if (!(c.ctx == p.ctx.without(x))) fail(d, "context mismatch: conclusion must drop x");
      return;
    }
    case Rule::EsRule: {
      if (d->premises.size() != 2) fail(d, "es takes two premises");
      const Judgment& b = d->premises[0]->conclusion;
      const Judgment& s = d->premises[1]->conclusion;
      if (!b.rhs_is_multi || !s.rhs_is_multi || !c.rhs_is_multi)
        fail(d, "rhs-kind mismatch: es works on multi judgments");
      if (c.subject->kind != TermKind::Es || !equal(c.subject->a, b.subject) ||
          !equal(c.subject->b, s.subject))
        fail(d, "subject mismatch");
      const std::string& x = c.subject->name;
      if (!(b.ctx.get(x) == s.rhs_multi)) fail(d, "subject type differs from x's entry");
      if (!(b.rhs_multi == c.rhs_multi)) fail(d, "conclusion type differs from body type");
      if (!(c.ctx == b.ctx.without(x).sum(s.ctx))) fail(d, "context-sum mismatch");
      return;
    }
    case Rule::Many: {
      if (!c.rhs_is_multi) fail(d, "rhs-kind mismatch: many concludes a multi type");
      if (!is_theoretical_value(c.subject))
        fail(d, "non-theoretical-value under many");
      TypeContext ctx;
      std::vector<LinearType> types;
      for (const auto& p : d->premises) {
        if (p->conclusion.rhs_is_multi) fail(d, "rhs-kind mismatch: many premises are linear");
        if (!equal(p->conclusion.subject, c.subject)) fail(d, "subject mismatch among premises");
        ctx = ctx.sum(p->conclusion.ctx);
        types.push_back(p->conclusion.rhs_linear);
      }
      if (!(MultiType(std::move(types)) == c.rhs_multi)) fail(d, "conclusion multiset mismatch");
      if (!(ctx == c.ctx)) fail(d, "context-sum mismatch");
      return;
    }
  }
}

void check_rec(const DerivPtr& d) {
  for (const auto& p : d->premises) check_rec(p);
  check_node(d);
}

}  // namespace

Judgment check_derivation(const DerivPtr& d) {
  check_rec(d);
  return d->conclusion;
}

bool is_valid(const DerivPtr& d) {
  try {
    check_derivation(d);
    return true;
  } catch (const DerivationError&) {
    return false;
  }
}

std::size_t deriv_size(const DerivPtr& d) {
  std::size_t n = d->rule == Rule::Many ? 0 : 1;
  for (const auto& p : d->premises) n += deriv_size(p);
  return n;
}

bool is_shrinking(const DerivPtr& d) {
  const Judgment& c = d->conclusion;
  return c.rhs_is_multi && is_left_ctx(c.ctx) && is_right(c.rhs_multi);
}

namespace {

using nlohmann::json;

json linear_to_json(const LinearType& a);

json multi_to_json(const MultiType& m) {
  json arr = json::array();
  for (const auto& a : m.elems()) arr.push_back(linear_to_json(a));
  return arr;
}

json linear_to_json(const LinearType& a) {
  if (a.is_ground()) return "G";
  return json{{"l", multi_to_json(a.left())}, {"r", multi_to_json(a.right())}};
}

LinearType linear_from_json(const json& j);

MultiType multi_from_json(const json& j) {
  if (!j.is_array()) throw DerivationError("multi type must be a list");
  std::vector<LinearType> elems;
  for (const auto& e : j) elems.push_back(linear_from_json(e));
  return MultiType(std::move(elems));
}

LinearType linear_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "G") return LinearType::ground();
  if (j.is_object() && j.contains("l") && j.contains("r"))
    return LinearType::arrow(multi_from_json(j["l"]), multi_from_json(j["r"]));
  throw DerivationError("linear type must be \"G\" or {\"l\":..., \"r\":...}");
}

json judgment_to_json(const Judgment& jd) {
  json ctx = json::object();
  for (const auto& [x, m] : jd.ctx.entries()) ctx[x] = multi_to_json(m);
  json rhs;
  if (jd.rhs_is_multi) {
    rhs = json{{"kind", "multi"}, {"type", multi_to_json(jd.rhs_multi)}};
  } else {
    rhs = json{{"kind", "linear"}, {"type", linear_to_json(jd.rhs_linear)}};
  }
  return json{{"ctx", ctx}, {"subject", print(jd.subject)}, {"rhs", rhs}};
}

Judgment judgment_from_json(const json& j) {
  TypeContext ctx;
  for (auto it = j.at("ctx").begin(); it != j.at("ctx").end(); ++it)
    ctx.set(it.key(), multi_from_json(it.value()));
  TermPtr subject = parse(j.at("subject").get<std::string>());
  const json& rhs = j.at("rhs");
  if (rhs.at("kind") == "multi")
    return Judgment::multi(std::move(ctx), std::move(subject), multi_from_json(rhs.at("type")));
  return Judgment::linear(std::move(ctx), std::move(subject), linear_from_json(rhs.at("type")));
}

json deriv_to_json_rec(const DerivPtr& d) {
  json prem = json::array();
  for (const auto& p : d->premises) prem.push_back(deriv_to_json_rec(p));
  return json{{"rule", rule_label(d->rule)},
              {"conclusion", judgment_to_json(d->conclusion)},
              {"premises", prem}};
}

Rule rule_from_label(const std::string& s) {
  if (s == "ax") return Rule::Ax;
  if (s == "@") return Rule::AppRule;
  if (s == "lam") return Rule::LamRule;
  if (s == "es") return Rule::EsRule;
  if (s == "many") return Rule::Many;
  throw DerivationError("unknown rule label: " + s);
}

DerivPtr deriv_from_json_rec(const json& j) {
  std::vector<DerivPtr> premises;
  for (const auto& p : j.at("premises")) premises.push_back(deriv_from_json_rec(p));
  return make_deriv(rule_from_label(j.at("rule").get<std::string>()), std::move(premises),
                    judgment_from_json(j.at("conclusion")));
}

}  // namespace

std::string derivation_to_json(const DerivPtr& d) { return deriv_to_json_rec(d).dump(2); }

DerivPtr derivation_from_json(const std::string& text) {
  return deriv_from_json_rec(json::parse(text));
}

}  // namespace vsc
