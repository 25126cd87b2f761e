#include <doctest.h>

#include "gpc/bassserre.hpp"
#include "gpc/oracle.hpp"
#include "helpers.hpp"

using namespace gpc;
using namespace gpc::test;

TEST_CASE("splittings") {
  auto r  = path_raag();
  auto sb = split_at(r, 1);
  CHECK(sb.A == VertexSet{0, 2});
  CHECK(sb.C == VertexSet{0, 2});
  CHECK(sb.B == VertexSet{0, 1, 2});
  CHECK(sb.degenerate);

  auto sa = split_at(r, 0);
  CHECK(sa.A == VertexSet{1, 2});
  CHECK(sa.C == VertexSet{1});
  CHECK(sa.B == VertexSet{0, 1});
  CHECK_FALSE(sa.degenerate);

  auto d  = fixture_racg2();
  auto su = split_at(d, 0);
  CHECK(su.C.empty());
  CHECK_FALSE(su.degenerate);

  CHECK_THROWS_AS(split_at(parse_spec("vertex a Z\n"), 0), std::invalid_argument);
  CHECK_THROWS_AS(alternating_form(r, sb, el(r, "a")), std::invalid_argument);
}

TEST_CASE("alternating form") {
  auto d = fixture_racg2();
  auto s = split_at(d, 0);
  CHECK(alternating_form(d, s, el(d, "w")).factors.size() == 1);
  CHECK(alternating_form(d, s, NormalForm()).factors.empty());

  auto f = alternating_form(d, s, el(d, "u*w*u"));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].side == Side::B);
  CHECK(f.factors[1].side == Side::A);
  CHECK(f.factors[2].side == Side::B);

  auto r  = path_raag();
  auto sa = split_at(r, 0);
  // b is central
  auto g  = alternating_form(r, sa, el(r, "b*a*c*b*a"));
  CHECK(str(r, g.prefix) == "b^2");
  REQUIRE(g.factors.size() == 3);
  CHECK(str(r, g.factors[0].element) == "a");
  CHECK(str(r, g.factors[1].element) == "c");
  CHECK(str(r, g.factors[2].element) == "a");
}

TEST_CASE("tree action") {
  auto d = fixture_racg2();
  auto s = split_at(d, 0);
  CHECK(classify_action(d, s, el(d, "w")).elliptic);
  CHECK(classify_action(d, s, el(d, "u*w*u")).elliptic);
  auto uw = classify_action(d, s, el(d, "u*w"));
  CHECK_FALSE(uw.elliptic);
  CHECK(uw.translation_length == 2);
  CHECK(classify_action(d, s, el(d, "u*w*u*w")).translation_length == 4);

  auto r  = path_raag();
  auto sa = split_at(r, 0);
  CHECK(classify_action(r, sa, el(r, "b*c")).elliptic);
  CHECK(classify_action(r, sa, el(r, "a*c")).translation_length == 2);
  CHECK(classify_action(r, sa, el(r, "c*a*c^-1")).elliptic);
}

TEST_CASE("translation length agrees with the tree oracle") {
  auto p = fixture_ex1();
  for (vertex_type v = 0; v < p.size(); ++v) {
    auto s = split_at(p, v);
    if (s.degenerate) {
      continue;
    }
    for (auto const& x : enumerate_ball(p, 4, 1).elements) {
      CHECK(classify_action(p, s, x).translation_length
            == tree_displacement_oracle(p, s, x));
    }
  }
}
