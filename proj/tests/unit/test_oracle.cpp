#include <doctest.h>

#include "gpc/oracle.hpp"
#include "helpers.hpp"

using namespace gpc;
using namespace gpc::test;

TEST_CASE("balls") {
  CHECK(enumerate_ball(fixture_ex1(), 0).size() == 1);
  auto d = enumerate_ball(fixture_racg2(), 2);
  CHECK(d.size() == 5);
  CHECK(d.contains(el(d.presentation, "u*w")));
  auto cube = parse_spec("vertex a Z/2\nvertex b Z/2\nvertex c Z/2\n"
                         "edge a b\nedge b c\nedge a c\n");
  CHECK(enumerate_ball(cube, 3).size() == 8);
  CHECK(enumerate_ball(path_raag(), 1, 2).size() == 13);
}

TEST_CASE("rewriting oracle") {
  auto p = fixture_ex2gen();
  auto w = parse_word(p, "a*c*a*c*a*c");
  CHECK(oracle_normal_form(p, w) == Word{{2, 3}});
  CHECK(oracle_normal_form(p, parse_word(p, "a^-1")) == Word{{0, 2}});
}

TEST_CASE("tree distances") {
  auto d = fixture_racg2();
  auto s = split_at(d, 0);
  CHECK(tree_distance_oracle(d, s, Side::A, NormalForm(), Side::B) == 1);
  CHECK(tree_distance_oracle(d, s, Side::A, el(d, "u"), Side::A) == 2);
  CHECK(tree_displacement_oracle(d, s, el(d, "u*w")) == 2);
  CHECK(tree_displacement_oracle(d, s, el(d, "u")) == 0);
}

TEST_CASE("generator is deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    auto p = random_presentation(a, {});
    auto q = random_presentation(b, {});
    CHECK(p == q);
    CHECK(random_word(a, p, 6) == random_word(b, q, 6));
  }
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.below(7) < 7);
    auto x = c.uniform(-2, 2);
    CHECK((x >= -2 && x <= 2));
  }
}

TEST_CASE("suites") {
  auto names = suite_names();
  CHECK(names.size() == 13);
  auto r = check_suite("nf_minimality", 3, 50);
  CHECK(r.passed());
  CHECK(r.trials == 50);
  CHECK(to_string(r) == to_string(check_suite("nf_minimality", 3, 50)));
  CHECK_THROWS(check_suite("no_such_suite", 1, 1));
}
