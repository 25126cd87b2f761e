#include <doctest.h>

#include "gpc/oracle.hpp"
#include "helpers.hpp"

using namespace gpc;
using namespace gpc::test;

TEST_CASE("spec files") {
  auto p = parse_spec("vertex a Z\nvertex b Z\nedge a b");
  CHECK(p.size() == 2);
  CHECK(p.adjacent(0, 1));
  CHECK_FALSE(p.order(0).is_finite());

  auto q = parse_spec("# ex1\nvertex v1 Z/3\nvertex v2 Z\nvertex v3 Z  # end\n"
                      "edge v1 v2\nedge v2 v3\n");
  CHECK(q == fixture_ex1());
  CHECK(parse_spec(format_spec(q)) == q);
}

TEST_CASE("spec errors carry a position") {
  auto fails = [](std::string_view text, std::size_t line, std::string const& what) {
    try {
      parse_spec(text);
      FAIL("no error for " << text);
    } catch (ParseError const& e) {
      CHECK(e.line() == line);
      CHECK(e.message().find(what) != std::string::npos);
    }
  };
  fails("vertex a Z/1", 1, "order");
  fails("vertex a Z\nvertex a Z", 2, "duplicate");
  fails("vertex a Z\nedge a b", 2, "unknown");
  fails("vertex a Z\nedge a a", 2, "self");
  fails("vertex a Z\nvertex b Z\nedge a b\nedge b a", 4, "duplicate");
  fails("vertx a Z", 1, "unknown directive");
  fails("vertex 1a Z", 1, "label");
}

TEST_CASE("words") {
  auto r = path_raag();
  auto w = parse_word(r, "a*b^-2*(c*a)^2");
  REQUIRE(w.size() == 6);
  CHECK(w[1] == Syllable(1, -2));
  CHECK(w[2] == Syllable(2, 1));
  CHECK(w[5] == Syllable(0, 1));

  auto k = parse_word(r, "[a,c]");
  CHECK(k == Word{{0, -1}, {2, -1}, {0, 1}, {2, 1}});
  CHECK(parse_word(r, "1").empty());
  CHECK(parse_word(r, " a * c ").size() == 2);
  CHECK(parse_word(r, "(a*c)^-1") == Word{{2, -1}, {0, -1}});

  CHECK_THROWS_AS(parse_word(r, "a*"), ParseError);
  CHECK_THROWS_AS(parse_word(r, "d"), ParseError);
  CHECK_THROWS_AS(parse_word(r, "(a"), ParseError);
  CHECK_THROWS_AS(parse_word(r, "(a*c)^1000000"), ParseError);
}

TEST_CASE("sets and parabolics") {
  auto r = path_raag();
  CHECK(parse_vertex_set(r, "a,c") == VertexSet{0, 2});
  CHECK(parse_vertex_set(r, "").empty());
  auto P = parse_parabolic(r, "c*b@a");
  CHECK(format(r, P) == "c@a");
  CHECK(format(r, parse_parabolic(r, "1@a,b")) == "1@a,b");
  CHECK(format(r, VertexSet{0, 2}) == "{a,c}");
}

TEST_CASE("formatting") {
  auto r = path_raag();
  CHECK(format(r, el(r, "1")) == "1");
  CHECK(format(r, el(r, "a*a*c^-3")) == "a^2*c^-3");
  CHECK(is_valid_label("v3"));
  CHECK_FALSE(is_valid_label(""));
  CHECK_FALSE(is_valid_label("a*b"));
}

TEST_CASE("printing and parsing round trip") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    auto p = random_presentation(rng, {});
    auto x = reduce(p, random_word(rng, p, 8, 40));
    CHECK(parse_element(p, format(p, x)) == x);
    CHECK(parse_spec(format_spec(p)) == p);
  }
}
