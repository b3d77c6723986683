#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vsc/derivation.hpp"
#include "vsc/parser.hpp"
#include "vsc/types.hpp"

using namespace vsc;

namespace {

const LinearType G = LinearType::ground();
const MultiType zero;

MultiType m(std::initializer_list<LinearType> xs) { return MultiType(std::vector<LinearType>(xs)); }

}  // namespace

TEST_CASE("multi type equality is order-insensitive") {
  LinearType a = LinearType::arrow(m({G}), m({G}));
  CHECK(m({G, a}) == m({a, G}));
  CHECK_FALSE(m({G}) == m({G, G}));
  CHECK(m({}) == zero);
  CHECK_FALSE(MultiType::singleton(G) == zero);  // [A] != 0
}

TEST_CASE("multiset sum is a commutative monoid") {
  LinearType a = LinearType::arrow(zero, m({G}));
  MultiType x = m({G, a}), y = m({a}), z = m({G, G});
  CHECK(x.sum(y) == y.sum(x));
  CHECK(x.sum(y.sum(z)) == x.sum(y).sum(z));
  CHECK(x.sum(zero) == x);
  CHECK(x.sum(y).minus(y) == x);
}

TEST_CASE("type contexts sum pointwise") {
  TypeContext g1, g2;
  g1.set("x", m({G}));
  g2.set("x", m({G}));
  g2.set("y", m({G}));
  TypeContext s = g1.sum(g2);
  CHECK(s.get("x") == m({G, G}));
  CHECK(s.get("y") == m({G}));
  CHECK(s.get("z") == zero);  // absent entries read as 0
  CHECK(g1.sum(g2) == g2.sum(g1));
  // empty entries are never stored
  TypeContext e;
  e.set("x", zero);
  CHECK(e.empty());
}

TEST_CASE("axiom instances check") {
  DerivPtr ax = ax_node("x", G);
  CHECK_NOTHROW(check_derivation(ax));
  CHECK(to_string(ax->conclusion) == "x:[G] |- x : G");

  // wrong context shape fails
  TypeContext ctx;
  ctx.set("x", m({G, G}));
  DerivPtr bad = make_deriv(Rule::Ax, {}, Judgment::linear(ctx, var("x"), G));
  CHECK_THROWS_AS(check_derivation(bad), DerivationError);
}

TEST_CASE("empty many types any value with 0") {
  DerivPtr d = many_node(parse("\\x.(\\d.d d) (\\d.d d)"), {});
  CHECK_NOTHROW(check_derivation(d));
  CHECK(d->conclusion.rhs_multi == zero);
  CHECK(deriv_size(d) == 0);

  // but not applications
  DerivPtr bad = many_node(parse("x y"), {});
  CHECK_THROWS_WITH_AS(check_derivation(bad),
                       doctest::Contains("non-theoretical-value"), DerivationError);
}

TEST_CASE("application needs a singleton arrow on the left") {
  // x:[G] |- x : [G] applied to anything is ill-formed
  DerivPtr xg = many_node(var("x"), {ax_node("x", G)});
  DerivPtr yg = many_node(var("y"), {ax_node("y", G)});
  DerivPtr bad = app_node(xg, yg);
  CHECK_THROWS_WITH_AS(check_derivation(bad), doctest::Contains("singleton"), DerivationError);

  // a proper redex typing: x:[[G] -o [G]], y:[G] |- x y : [G]
  LinearType arrow = LinearType::arrow(m({G}), m({G}));
  DerivPtr fun = many_node(var("x"), {ax_node("x", arrow)});
  DerivPtr good = app_node(fun, yg);
  CHECK_NOTHROW(check_derivation(good));
  CHECK(good->conclusion.rhs_multi == m({G}));
  CHECK(deriv_size(good) == 1 + 1 + 1);  // two ax plus the @
}

TEST_CASE("lambda moves the binder entry into the arrow") {
  DerivPtr body = many_node(var("z"), {ax_node("z", G)});  // z:[G] |- z : [G]
  DerivPtr lamd = lam_node("z", body);
  CHECK_NOTHROW(check_derivation(lamd));
  CHECK(lamd->conclusion.ctx.empty());
  CHECK_FALSE(lamd->conclusion.rhs_is_multi);

  DerivPtr full = many_node(parse("\\z.z"), {lamd});
  CHECK_NOTHROW(check_derivation(full));
  CHECK(full->conclusion.rhs_multi == m({LinearType::arrow(m({G}), m({G}))}));
  CHECK(deriv_size(full) == 2);  // one ax, one lam
}

TEST_CASE("es consumes the binder entry against the subject type") {
  // x:[G] |- x : [G]   y:[G] |- y : [G]   =>   y:[G] |- x[x <- y] : [G]
  DerivPtr body = many_node(var("x"), {ax_node("x", G)});
  DerivPtr subj = many_node(var("y"), {ax_node("y", G)});
  DerivPtr d = es_node("x", body, subj);
  CHECK_NOTHROW(check_derivation(d));
  CHECK(d->conclusion.ctx.get("y") == m({G}));
  CHECK(d->conclusion.ctx.get("x") == zero);
  CHECK(deriv_size(d) == 3);

  // type mismatch between entry and subject fails
  DerivPtr subj2 = many_node(var("y"), {ax_node("y", G), ax_node("y", G)});
  CHECK_THROWS_AS(check_derivation(es_node("x", body, subj2)), DerivationError);
}

TEST_CASE("derivation size ignores many nodes") {
  DerivPtr x1 = ax_node("x", G);
  DerivPtr manyd = many_node(var("x"), {x1, x1});  // sharing: still two occurrences
  CHECK(deriv_size(manyd) == 2);
}

TEST_CASE("shrinking type classes") {
  CHECK(is_left(m({G})));
  CHECK(is_right(m({G})));
  CHECK(is_left(zero));
  CHECK_FALSE(is_right(zero));
  LinearType zero_to_g = LinearType::arrow(zero, m({G}));
  CHECK(is_right(m({zero_to_g})));
  CHECK_FALSE(is_left(m({zero_to_g})));
  // G -> 0 the other way round: [[G] -o 0] is left but not right
  LinearType g_to_zero = LinearType::arrow(m({G}), zero);
  CHECK(is_left(m({g_to_zero})));
  CHECK_FALSE(is_right(m({g_to_zero})));
}

TEST_CASE("left contexts and shrinking derivations") {
  TypeContext g;
  g.set("x", m({G}));
  CHECK(is_left_ctx(g));
  g.set("y", m({LinearType::arrow(zero, m({G}))}));
  CHECK_FALSE(is_left_ctx(g));

  DerivPtr lam0 = many_node(parse("\\x.(\\d.d d) (\\d.d d)"), {});
  CHECK_FALSE(is_shrinking(lam0));  // 0 is left but not right

  DerivPtr xg = many_node(var("x"), {ax_node("x", G)});
  CHECK(is_shrinking(xg));  // x:[G] |- x : [G]
}

TEST_CASE("shrinkingness inspects the conclusion only") {
  // two derivations of x:[G,G] |- x : [G,G] differing below the root
  DerivPtr a = many_node(var("x"), {ax_node("x", G), ax_node("x", G)});
  std::vector<DerivPtr> sub = {many_node(var("x"), {ax_node("x", G)})};
  CHECK(is_shrinking(a));
  DerivPtr b = make_deriv(Rule::Many, {a->premises[1], a->premises[0]}, a->conclusion);
  CHECK_NOTHROW(check_derivation(b));
  CHECK(is_shrinking(b) == is_shrinking(a));
}

TEST_CASE("judgment JSON round trip") {
  DerivPtr body = many_node(var("x"), {ax_node("x", G)});
  DerivPtr subj = many_node(var("y"), {ax_node("y", G)});
  DerivPtr d = es_node("x", body, subj);
  std::string text = derivation_to_json(d);
  DerivPtr back = derivation_from_json(text);
  CHECK_NOTHROW(check_derivation(back));
  CHECK(same_judgment(back->conclusion, d->conclusion));
  CHECK(deriv_size(back) == deriv_size(d));
  // types keep their shape through the encoding
  CHECK(text.find("\"G\"") != std::string::npos);
}

TEST_CASE("malformed derivation JSON is rejected") {
  CHECK_THROWS(derivation_from_json("{\"rule\": \"nope\", \"premises\": [], "
                                    "\"conclusion\": {}}"));
  CHECK_THROWS(derivation_from_json("not json at all"));
}
