#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vsc/classify.hpp"
#include "vsc/enumerate.hpp"
#include "vsc/parser.hpp"
#include "vsc/rewrite.hpp"

using namespace vsc;

TEST_CASE("values and theoretical values") {
  CHECK(is_value(parse("\\x.(\\d.d d) (\\d.d d)")));  // body may diverge
  CHECK_FALSE(is_value(parse("x")));
  CHECK(is_theoretical_value(parse("x")));
  CHECK_FALSE(is_value(parse("x y")));
  CHECK_FALSE(is_theoretical_value(parse("x y")));
}

TEST_CASE("inert terms and fireballs") {
  CHECK(is_inert(parse("y y")));
  CHECK(is_inert(parse("y (\\x.x)")));
  CHECK(is_inert(parse("x y")));
  CHECK(is_inert(parse("z (\\x.x) (z z) (\\y.t)")));
  CHECK_FALSE(is_fireball(parse("(\\x.x x) (\\x.x x)")));
  // ES cases: fireball body over inert subject
  CHECK(is_fireball(parse("(\\z.z)[x <- y y]")));
  CHECK_FALSE(is_fireball(parse("(\\z.z)[x <- \\w.w]")));  // subject not inert
  CHECK(is_inert(parse("(x y)[x <- z z]")));
}

TEST_CASE("strong classes") {
  CHECK(is_strong_fireball(parse("\\x.y x")));
  CHECK_FALSE(is_strong_fireball(parse("\\x.(\\d.d d) (\\d.d d)")));
  CHECK(is_strong_fireball(parse("(\\z.z)[x <- y w]")));
  CHECK(is_strong_value(parse("\\x.\\y.x")));
  CHECK(is_strong_inert(parse("x (\\y.z y)")));
  CHECK_FALSE(is_strong_inert(parse("x (\\y.(\\d.d d) (\\d.d d))")));
}

TEST_CASE("rigid terms") {
  CHECK(is_rigid(parse("y ((\\d.d d) (\\d.d d))")));  // rigid but not inert
  CHECK_FALSE(is_inert(parse("y ((\\d.d d) (\\d.d d))")));
  CHECK(is_rigid(parse("x")));
  CHECK_FALSE(is_rigid(parse("\\x.x")));
  CHECK(is_rigid(parse("(x t)[x <- y u]")));
  CHECK_FALSE(is_rigid(parse("x[x <- \\y.y]")));
}

TEST_CASE("answers") {
  CHECK(is_answer(parse("\\x.x")));
  CHECK(is_answer(parse("(\\x.x)[y <- z]")));
  CHECK(is_answer(parse("(\\x.x)[y <- z][w <- q q]")));
  CHECK_FALSE(is_answer(parse("x[y <- \\z.z]")));
  CHECK_FALSE(is_answer(parse("(\\x.x) y")));
}

TEST_CASE("fire classes on pure terms") {
  CHECK(is_fire_inert(parse("y (\\z.(\\d.d d) (\\d.d d))")));
  CHECK(is_fire_fireball(parse("\\x.t x")));
  CHECK_FALSE(is_fire_inert(parse("(\\x.x) y")));
  CHECK_FALSE(is_fire_fireball(parse("(\\x.x) y")));
  CHECK(is_fire_inert(parse("x y z")));
  CHECK_THROWS_AS(is_fire_fireball(parse("x[y <- z]")), std::invalid_argument);
}

TEST_CASE("classify_all lists fire classes only for pure terms") {
  auto rows = classify_all(parse("x[y <- z]"));
  for (const auto& r : rows) CHECK(r.name.rfind("fire-", 0) == std::string::npos);
  auto pure = classify_all(parse("x y"));
  bool has_fire = false;
  for (const auto& r : pure) has_fire = has_fire || r.name == "fire-inert";
  CHECK(has_fire);
}

TEST_CASE("harmony and inclusions over small enumerated terms") {
  EnumOptions opts;
  opts.max_size = 6;
  opts.free_pool = {"y"};
  for (const auto& t : enumerate_all(opts)) {
    CAPTURE(print(t));
    CHECK(is_fireball(t) == !has_redex(t, Strategy::Open));
    CHECK(is_strong_fireball(t) == !has_redex(t, Strategy::Vsc));
    if (is_pure(t)) CHECK(is_fire_fireball(t) == !has_redex(t, Strategy::Fire));
    if (is_inert(t)) CHECK(is_rigid(t));
    if (is_strong_inert(t)) CHECK(is_inert(t));
    if (is_value(t)) CHECK(is_answer(t));
  }
}
