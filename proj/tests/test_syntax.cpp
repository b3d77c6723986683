#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "vsc/enumerate.hpp"
#include "vsc/parser.hpp"
#include "vsc/term.hpp"

using namespace vsc;

TEST_CASE("parsing follows the grammar") {
  CHECK(equal(parse("\\x.x x"), lam("x", app(var("x"), var("x")))));
  CHECK(equal(parse("(x x)[x <- \\y.y]"),
              es(app(var("x"), var("x")), "x", lam("y", var("y")))));
  // application is left-associative, a lambda body extends maximally
  CHECK(equal(parse("\\x.\\y.x y z"),
              lam("x", lam("y", app(app(var("x"), var("y")), var("z"))))));
  // ES binds tighter than application on both sides
  CHECK(equal(parse("f x[a <- b]"), app(var("f"), es(var("x"), "a", var("b")))));
  CHECK(equal(parse("x[a <- b] f"), app(es(var("x"), "a", var("b")), var("f"))));
  // ES chains are left-nested
  CHECK(equal(parse("x[a <- b][c <- d]"),
              es(es(var("x"), "a", var("b")), "c", var("d"))));
  CHECK(equal(parse("λx.x"), parse("\\x.x")));
  CHECK(equal(parse("  \\x . x  "), lam("x", var("x"))));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse("\\x."), ParseError);
  CHECK_THROWS_AS(parse("(x"), ParseError);
  CHECK_THROWS_AS(parse("x[y < z]"), ParseError);
  CHECK_THROWS_AS(parse("x)"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  // open terms are fine, unbound names are not an error
  CHECK_NOTHROW(parse("x y z"));
}

TEST_CASE("printing round-trips") {
  CHECK(print(lam("x", var("x"))) == "\\x.x");
  CHECK(print(es(var("x"), "x", lam("y", var("y")))) == "x[x <- \\y.y]");
  CHECK(print(app(lam("x", var("x")), lam("y", var("y")))) == "(\\x.x) (\\y.y)");

  for (const char* src : {"\\x.x x", "(\\x.x) (\\y.y) z", "x[x <- \\y.y] (z w)",
                          "\\x.\\y.x y z", "(x x)[x <- \\y.y][a <- b c]"}) {
    TermPtr t = parse(src);
    CHECK(equal(parse(print(t)), t));
    CHECK(equal(parse(print_full(t)), t));
    CHECK(print(t) == src);  // printed forms are fixed points
  }
}

TEST_CASE("free variables respect ES scoping") {
  CHECK(free_vars(parse("\\x.x y")) == std::set<std::string>{"y"});
  CHECK(free_vars(parse("(x y)[x <- z]")) == std::set<std::string>{"y", "z"});
  CHECK(free_vars(parse("(\\x.x x) (\\x.x x)")).empty());
  // the ES binder scopes over the body only
  CHECK(free_vars(parse("x[x <- x]")) == std::set<std::string>{"x"});
}

TEST_CASE("substitution avoids capture") {
  // (\x.\y.z){z <- x y} renames both binders
  TermPtr t = parse("\\x.\\y.z");
  TermPtr r = subst(t, "z", parse("x y"));
  CHECK(alpha_eq(r, parse("\\x'.\\y'.x y")));
  CHECK(free_vars(r) == std::set<std::string>{"x", "y"});

  CHECK(equal(subst(var("x"), "x", lam("v", var("v"))), lam("v", var("v"))));
  CHECK(equal(subst(var("y"), "x", lam("v", var("v"))), var("y")));
  // no occurrence: the input is returned untouched
  TermPtr u = parse("\\a.a b");
  CHECK(subst(u, "x", var("c")).get() == u.get());
}

TEST_CASE("substitution freshness bound") {
  auto sub = [](const char* t, const char* x, const char* u) {
    return free_vars(subst(parse(t), x, parse(u)));
  };
  CHECK(sub("x y", "x", "\\z.z w") == std::set<std::string>{"y", "w"});
  CHECK(sub("\\y.x y", "x", "y y") == std::set<std::string>{"y"});
  CHECK(sub("x[a <- x]", "x", "q") == std::set<std::string>{"q"});
}

TEST_CASE("substitution freshness over enumerated pairs") {
  EnumOptions opts;
  opts.max_size = 4;
  opts.free_pool = {"x", "y"};
  auto population = enumerate_all(opts);
  std::vector<TermPtr> values = {parse("\\z.z"), parse("\\z.z x"), parse("\\z.y")};
  for (const auto& t : population) {
    std::set<std::string> tfv = free_vars(t);
    for (const auto& v : values) {
      TermPtr r = subst(t, "x", v);
      std::set<std::string> want = tfv;
      want.erase("x");
      if (tfv.count("x")) {
        for (const auto& n : free_vars(v)) want.insert(n);
        CHECK(free_vars(r) == want);
      } else {
        CHECK(free_vars(r) == want);
      }
      CHECK(alpha_eq(r, subst(canon(t), "x", v)));  // stable across renaming
    }
  }
}

TEST_CASE("alpha equivalence and canonical forms") {
  CHECK(alpha_eq(parse("\\x.x"), parse("\\y.y")));
  CHECK_FALSE(alpha_eq(parse("\\x.\\y.x"), parse("\\x.\\y.y")));
  CHECK(alpha_eq(parse("x[x <- y]"), parse("z[z <- y]")));
  CHECK_FALSE(alpha_eq(parse("x[x <- y]"), parse("x[x <- x]")));

  // canonicalization is idempotent and stable under renaming
  for (const char* src : {"\\x.x (\\y.y x)", "(a b)[a <- \\c.c]", "\\q.q[w <- q]"}) {
    TermPtr t = parse(src);
    CHECK(equal(canon(t), canon(canon(t))));
    CHECK(alpha_eq(canon(t), t));
  }
  // canonical binders skip the free variables of the term
  CHECK(equal(canon(parse("\\x.x a")), parse("\\b.b a")));
}

namespace {

// Brute-force oracle: all raw trees of a given size over a fixed name
// alphabet, deduplicated by alpha-equivalence.
std::vector<TermPtr> raw_terms(std::size_t size, const std::vector<std::string>& names) {
  std::vector<TermPtr> out;
  if (size == 0) return out;
  if (size == 1) {
    for (const auto& n : names) out.push_back(var(n));
    return out;
  }
  for (const auto& n : names)
    for (const auto& b : raw_terms(size - 1, names)) out.push_back(lam(n, b));
  for (std::size_t l = 1; l + 1 < size; ++l) {
    for (const auto& f : raw_terms(l, names))
      for (const auto& a : raw_terms(size - 1 - l, names)) {
        out.push_back(app(f, a));
        for (const auto& n : names) out.push_back(es(f, n, a));
      }
  }
  return out;
}

std::set<std::string> alpha_classes(const std::vector<TermPtr>& ts,
                                    const std::set<std::string>& allowed_free) {
  std::set<std::string> keys;
  for (const auto& t : ts) {
    std::set<std::string> fv = free_vars(t);
    bool ok = true;
    for (const auto& v : fv) ok = ok && allowed_free.count(v) > 0;
    if (ok) keys.insert(alpha_key(t));
  }
  return keys;
}

}  // namespace

TEST_CASE("enumeration matches the brute-force oracle") {
  // sizes 1..4, pool {y}: raw generation over a 4-name alphabet reaches
  // every alpha-class (at most 3 binders fit in 4 nodes)
  std::vector<std::string> alphabet = {"y", "n1", "n2", "n3"};
  std::set<std::string> raw_keys;
  for (std::size_t s = 1; s <= 4; ++s) {
    auto keys = alpha_classes(raw_terms(s, alphabet), {"y"});
    raw_keys.insert(keys.begin(), keys.end());
  }

  EnumOptions opts;
  opts.max_size = 4;
  opts.free_pool = {"y"};
  std::set<std::string> enum_keys;
  for (const auto& t : enumerate_all(opts)) {
    CHECK(t->size <= 4);
    CHECK(enum_keys.insert(alpha_key(t)).second);  // no duplicates
  }
  CHECK(enum_keys == raw_keys);
}

TEST_CASE("enumeration at tiny sizes") {
  EnumOptions opts;
  opts.pure_only = true;

  opts.max_size = 1;
  CHECK(enumerate_all(opts).empty());  // no closed term of size 1

  opts.max_size = 2;
  auto size2 = enumerate_all(opts);
  REQUIRE(size2.size() == 1);
  CHECK(alpha_eq(size2[0], parse("\\a.a")));

  // one alpha-class per emitted term, all pure, deterministic order
  opts.max_size = 3;
  auto size3 = enumerate_all(opts);
  REQUIRE(size3.size() == 3);
  CHECK(alpha_eq(size3[0], parse("\\a.a")));
  CHECK(alpha_eq(size3[1], parse("\\a.\\b.a")));
  CHECK(alpha_eq(size3[2], parse("\\a.\\b.b")));

  auto again = enumerate_all(opts);
  REQUIRE(again.size() == size3.size());
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(equal(again[i], size3[i]));
}

TEST_CASE("round trip over the enumerated population") {
  EnumOptions opts;
  opts.max_size = 5;
  opts.free_pool = {"y"};
  for (const auto& t : enumerate_all(opts)) {
    CAPTURE(print(t));
    CHECK(alpha_eq(parse(print(t)), t));
  }
}

TEST_CASE("name pool is deterministic") {
  NamePool a({"x", "x1"});
  CHECK(a.fresh("x") == "x2");
  CHECK(a.fresh("x") == "x3");
  NamePool b({"x", "x1"});
  CHECK(b.fresh("x") == "x2");
  CHECK(b.fresh("y") == "y");
  CHECK(b.fresh("y") == "y1");
}

TEST_CASE("paths resolve and replace") {
  TermPtr t = parse("(\\x.x) (y z)");
  CHECK(equal(resolve(t, {Move::AppL, Move::LamBody}), var("x")));
  CHECK(equal(resolve(t, {Move::AppR, Move::AppL}), var("y")));
  CHECK(equal(replace_at(t, {Move::AppR}, var("w")), parse("(\\x.x) w")));
  CHECK_THROWS_AS(resolve(t, {Move::EsBody}), std::invalid_argument);
}
