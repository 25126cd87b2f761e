#include <doctest.h>

#include "gpc/oracle.hpp"
#include "gpc/parabolic.hpp"
#include "helpers.hpp"

using namespace gpc;
using namespace gpc::test;

namespace {
  VertexSet const A{0}, B{1}, C{2};
}

TEST_CASE("retraction") {
  auto p = fixture_ex2gen();
  CHECK(retraction(p, {}, el(p, "a*b*c")).empty());
  CHECK(retraction(p, {0}, el(p, "a*c*a*c*a*c")).empty());
  CHECK(str(p, retraction(p, {0, 1}, el(p, "a*c*b*c"))) == "a*b");
}

TEST_CASE("canonical form") {
  auto r = path_raag();
  auto P = canonicalize(r, el(r, "a"), A);
  CHECK(P.conjugator().empty());
  CHECK(P.base() == A);

  auto Q = canonicalize(r, el(r, "c"), A);
  CHECK(str(r, Q.conjugator()) == "c");

  auto R = canonicalize(r, el(r, "c*b"), A);
  CHECK(str(r, R.conjugator()) == "c");
  CHECK(R == Q);
}

TEST_CASE("containment and membership") {
  auto r   = path_raag();
  auto Ga  = full_subgroup(r, A);
  auto Gab = full_subgroup(r, {0, 1});
  auto cGa = canonicalize(r, el(r, "c"), A);

  CHECK(parabolic_equal(Ga, Ga));
  CHECK(parabolic_contains(r, Gab, Ga));
  CHECK_FALSE(parabolic_contains(r, Ga, Gab));
  CHECK_FALSE(parabolic_contains(r, Ga, cGa));
  CHECK_FALSE(parabolic_contains(r, cGa, Ga));

  CHECK(element_in_parabolic(r, NormalForm(), cGa));
  CHECK(element_in_parabolic(r, el(r, "a^2"), Ga));
  CHECK_FALSE(element_in_parabolic(r, el(r, "c"), Ga));
  CHECK(element_in_parabolic(r, el(r, "c*a*c^-1"), cGa));
  CHECK_FALSE(element_in_parabolic(r, el(r, "a"), cGa));
}

TEST_CASE("intersection") {
  auto r = path_raag();
  CHECK(intersect(r, full_subgroup(r, {0, 1}), full_subgroup(r, {1, 2}))
        == full_subgroup(r, B));
  auto cGa = canonicalize(r, el(r, "c"), A);
  CHECK(intersect(r, cGa, full_subgroup(r, {0, 1})).is_trivial());
  CHECK(intersect(r, cGa, cGa) == cGa);

  auto P = canonicalize(r, el(r, "c^2*a"), {0, 1});
  auto Q = canonicalize(r, el(r, "c^2"), {1, 2});
  CHECK(intersect(r, P, Q) == canonicalize(r, el(r, "c^2"), B));
}

TEST_CASE("normalizer") {
  auto r = path_raag();
  CHECK(normalizer(r, full_subgroup(r, B)) == full_subgroup(r, {0, 1, 2}));
  CHECK(normalizer(r, full_subgroup(r, A)) == full_subgroup(r, {0, 1}));
  CHECK(normalizer(r, canonicalize(r, el(r, "c"), A))
        == canonicalize(r, el(r, "c"), {0, 1}));
  CHECK_THROWS_AS(normalizer(r, ParabolicSubgroup()), std::invalid_argument);
}

TEST_CASE("conjugating into a full subgroup") {
  auto r  = path_raag();
  auto s1 = conjugate_into_full(r, els(r, {"a"}), A);
  REQUIRE(s1.status == ConjugatorSearch::Status::found);
  CHECK(s1.conjugator->empty());

  auto s2 = conjugate_into_full(r, els(r, {"c*a^2*c^-1"}), A);
  REQUIRE(s2.status == ConjugatorSearch::Status::found);
  CHECK(str(r, *s2.conjugator) == "c");

  auto s3 = conjugate_into_full(r, els(r, {"a", "c"}), A);
  CHECK(s3.status == ConjugatorSearch::Status::impossible);
  CHECK_FALSE(s3.conjugator);
}

TEST_CASE("parabolic closure") {
  auto r = path_raag();
  CHECK(parabolic_closure(r, els(r, {"1"})).subgroup.is_trivial());
  CHECK(parabolic_closure(r, els(r, {"c*a*c^-1"})).subgroup
        == canonicalize(r, el(r, "c"), A));
  CHECK(parabolic_closure(r, els(r, {"a*b"})).subgroup
        == full_subgroup(r, {0, 1}));
  CHECK(parabolic_closure(r, els(r, {"a", "c"})).subgroup
        == full_subgroup(r, {0, 2}));

  auto q = parse_spec("vertex a Z/3\nvertex b Z\nvertex c Z\nedge a b\n");
  auto x = el(q, "c*b*a*b^-1*c^-1");
  auto P = parabolic_closure(q, {&x, 1}).subgroup;
  CHECK(P.base() == A);
  CHECK(element_in_parabolic(q, x, P));
}

TEST_CASE("essential support") {
  auto r = path_raag();
  CHECK(essential_support(r, els(r, {"c*a*c^-1"})) == A);
  CHECK(support(el(r, "c*a*c^-1")) == VertexSet{0, 2});
  CHECK(essential_support(r, els(r, {"a", "c"})) == VertexSet{0, 2});
  CHECK(essential_support(r, std::vector<NormalForm>{}).empty());
}

TEST_CASE("budget exhaustion is reported") {
  auto r = path_raag();
  auto X = els(r, {"c^2*a*c^-2"});
  auto d = descend(r, X, 0);
  CHECK(d.budget_exhausted);
  CHECK(parabolic_closure(r, X, 0).budget_exhausted);
  CHECK_FALSE(parabolic_closure(r, X).budget_exhausted);
}

TEST_CASE("closure contains the input on random data") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto p  = random_presentation(rng, {});
    auto x  = reduce(p, random_word(rng, p, 6));
    auto cl = parabolic_closure(p, {&x, 1});
    CHECK(element_in_parabolic(p, x, cl.subgroup));
  }
}
