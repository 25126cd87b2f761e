#include <doctest.h>

#include "gpc/classify.hpp"
#include "gpc/oracle.hpp"
#include "helpers.hpp"

using namespace gpc;
using namespace gpc::test;

TEST_CASE("is_abelian") {
  auto r = path_raag();
  CHECK(is_abelian(r, els(r, {"a^2", "a^-3"})));
  CHECK_FALSE(is_abelian(r, els(r, {"a", "c"})));
  CHECK(is_abelian(r, els(r, {"a*b", "b*a"})));
}

TEST_CASE("abelian rank") {
  auto r = path_raag();
  CHECK(abelian_rank(r, els(r, {"a^2", "a^3"})).rank == 1);
  CHECK(abelian_rank(r, els(r, {"a", "b"})).rank == 2);
  CHECK(abelian_rank(r, els(r, {"a", "b", "a*b"})).rank == 2);

  auto s = fixture_square();
  auto x = abelian_rank(s, els(s, {"a*c", "b*d", "(a*c)^2*(b*d)^-1"}));
  CHECK(x.rank == 2);
  CHECK_FALSE(x.bound_limited);
  CHECK_FALSE(x.torsion);
  CHECK(abelian_rank(s, els(s, {"a*c", "b*d", "a*c*b*d^2"})).rank == 3);

  auto p = fixture_ex2gen();
  CHECK_FALSE(abelian_rank(p, els(p, {"a*b", "c"})).torsion);
  auto t = abelian_rank(p, els(p, {"a", "c"}));
  CHECK(t.torsion);
  CHECK(t.rank == 1);
}

TEST_CASE("relation search") {
  auto p   = fixture_ex2gen();
  auto rel = find_relation(p, el(p, "a*c"), el(p, "b*c"), 6);
  REQUIRE(rel);
  CHECK(to_string(*rel) == "x^3*y^-3");
  CHECK_FALSE(find_relation(p, el(p, "a*c"), el(p, "b*c"), 5));

  auto r = path_raag();
  CHECK_FALSE(find_relation(r, el(r, "a"), el(r, "c"), 6));
  CHECK(to_string(*find_relation(r, el(r, "a"), el(r, "b"), 4)) == "x*y*x^-1*y^-1");
}

TEST_CASE("verdicts") {
  auto r = path_raag();
  auto v = classify(r, els(r, {"a", "c"}));
  CHECK(v.kind == Verdict::Kind::contains_free);
  CHECK(v.certified);
  REQUIRE(v.witness);
  CHECK(str(r, v.witness->first) == "a");
  CHECK(str(r, v.witness->second) == "c");

  auto ab = classify(r, els(r, {"a", "b"}));
  CHECK(ab.kind == Verdict::Kind::free_abelian);
  CHECK(ab.rank == 2);

  CHECK(classify(r, els(r, {"1"})).kind == Verdict::Kind::trivial);
  CHECK(classify(r, std::vector<NormalForm>{}).kind == Verdict::Kind::trivial);

  auto d = fixture_racg2();
  CHECK(classify(d, els(d, {"u", "w"})).kind == Verdict::Kind::infinite_dihedral);
  auto fc = classify(d, els(d, {"u*w*u"}));
  CHECK(fc.kind == Verdict::Kind::finite_cyclic);
  CHECK(fc.order == 2);
  CHECK(classify(d, els(d, {"u*w"})).kind == Verdict::Kind::infinite_cyclic);

  auto k = parse_spec("vertex s Z/2\nvertex t Z/2\nedge s t\n");
  CHECK(classify(k, els(k, {"s", "t"})).kind == Verdict::Kind::unknown);
}

TEST_CASE("two-generator fixture is not certified free") {
  auto p = fixture_ex2gen();
  CHECK(el(p, "(a*c)^3") == el(p, "c^3"));
  CHECK(el(p, "(b*c)^3") == el(p, "c^3"));
  CHECK(commute(p, el(p, "c^3"), el(p, "a*c")));
  CHECK(commute(p, el(p, "c^3"), el(p, "b*c")));

  auto v = classify(p, els(p, {"a*c", "b*c"}));
  CHECK_FALSE(v.certified);
  REQUIRE(v.search);
  CHECK(v.search->relation_length == 6);
  REQUIRE(v.search->generator_relation);
  CHECK(to_string(*v.search->generator_relation) == "x^3*y^-3");
  if (v.witness) {
    auto const& [x, y] = *v.witness;
    CHECK_FALSE(find_relation(p, x, y, 6));
  }
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Kind::contains_free) == "ContainsNonabelianFree");
  CHECK(to_string(Verdict::Kind::free_abelian) == "FreeAbelian");
  CHECK(to_string(FreeWord{}) == "1");
  CHECK(to_string(FreeWord{1, 1, -2}) == "x^2*y^-1");
}
