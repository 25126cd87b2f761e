#include <doctest.h>

#include "gpc/oracle.hpp"
#include "helpers.hpp"

using namespace gpc;
using namespace gpc::test;

TEST_CASE("reduce") {
  auto p = fixture_ex2gen();
  CHECK(reduce(p, {}).empty());
  CHECK(str(p, el(p, "a*c*a*c*a*c")) == "c^3");

  auto r = path_raag();
  CHECK(str(r, el(r, "b*a*b^-1*c")) == "a*c");
  CHECK(str(r, el(r, "c*a")) == "c*a");
  CHECK(str(r, el(r, "c*b")) == "b*c");
  CHECK(str(r, el(r, "b*a")) == "a*b");
}

TEST_CASE("multiply and invert") {
  auto p = fixture_ex2gen();
  auto x = el(p, "a*b*c^-2*b");
  CHECK(multiply(p, x, invert(p, x)).empty());
  CHECK(multiply(p, x, NormalForm()) == x);
  CHECK(str(p, multiply(p, el(p, "a^2"), el(p, "a^2"))) == "a");

  auto r = path_raag();
  CHECK(str(r, invert(r, el(r, "a*c"))) == "c^-1*a^-1");
  CHECK(str(p, invert(p, el(p, "a^2"))) == "a");
  CHECK(invert(p, NormalForm()).empty());
}

TEST_CASE("power and conjugate") {
  auto p = fixture_ex2gen();
  CHECK(power(p, el(p, "a*c"), 3) == el(p, "c^3"));
  CHECK(power(p, el(p, "a*b"), -2) == el(p, "b^-1*a^-1*b^-1*a^-1"));
  CHECK(conjugate(p, el(p, "a"), el(p, "b")) == el(p, "b^-1*a*b"));
  CHECK(commute(p, el(p, "c^3"), el(p, "a*c")));
  CHECK_FALSE(commute(p, el(p, "a"), el(p, "b")));
}

TEST_CASE("length, support, fv and lv") {
  auto r = path_raag();
  NormalForm e;
  CHECK(length(e) == 0);
  CHECK(support(e).empty());
  CHECK(first_vertices(r, e).empty());
  CHECK(last_vertices(r, e).empty());

  auto ac = el(r, "a*c");
  CHECK(first_vertices(r, ac) == VertexSet{0});
  CHECK(last_vertices(r, ac) == VertexSet{2});
  CHECK(support(ac) == VertexSet{0, 2});

  auto ab = el(r, "a*b");
  CHECK(first_vertices(r, ab) == VertexSet{0, 1});
  CHECK(last_vertices(r, ab) == VertexSet{0, 1});
  CHECK(total_length(els(r, {"a*c", "b^5", "1"})) == 3);
}

TEST_CASE("cyclic reduction") {
  auto r  = path_raag();
  auto cr = cyclically_reduce(r, el(r, "c*a*c^-1"));
  CHECK(str(r, cr.conjugator) == "c");
  CHECK(str(r, cr.core) == "a");

  auto plain = cyclically_reduce(r, el(r, "a*c"));
  CHECK(plain.conjugator.empty());
  CHECK(str(r, plain.core) == "a*c");
}

TEST_CASE("order") {
  auto p = fixture_ex2gen();
  CHECK(order(p, NormalForm()) == Exponent(1));
  CHECK(order(p, el(p, "a")) == Exponent(3));
  CHECK(order(p, el(p, "c*a*c^-1")) == Exponent(3));
  CHECK(order(p, el(p, "b*a*b^-1")) == Exponent(3));
  CHECK_FALSE(order(p, el(p, "a*b")));
  CHECK_FALSE(order(p, el(p, "c")));

  auto d = fixture_racg2();
  CHECK_FALSE(order(d, el(d, "u*w")));

  auto z6 = parse_spec("vertex s Z/2\nvertex t Z/3\nedge s t\n");
  CHECK(order(z6, el(z6, "s*t")) == Exponent(6));
}

TEST_CASE("large exponents") {
  auto p = parse_spec("vertex a Z\nvertex b Z/7\n");
  auto x = el(p, "a^123456789012345678901234567890");
  CHECK(str(p, multiply(p, x, x)) == "a^246913578024691357802469135780");
  CHECK(str(p, el(p, "b^100")) == "b^2");
}

TEST_CASE("full subpresentation") {
  auto p   = fixture_ex1();
  auto sub = full_subpresentation(p, {0, 2});
  CHECK(sub.presentation.size() == 2);
  CHECK(sub.presentation.label(1) == "v3");
  CHECK(sub.presentation.graph().number_of_edges() == 0);
  CHECK(sub.to_parent == std::vector<vertex_type>{0, 2});
}

TEST_CASE("reduce agrees with the rewriting oracle") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = random_presentation(rng, {});
    auto w = random_word(rng, p, 6);
    CHECK(reduce(p, w).word() == oracle_normal_form(p, w));
  }
}
