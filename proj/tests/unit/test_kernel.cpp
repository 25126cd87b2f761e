#include <doctest.h>

#include "gpc/kernel.hpp"
#include "gpc/oracle.hpp"
#include "helpers.hpp"

using namespace gpc;
using namespace gpc::test;

TEST_CASE("census of the ex1 kernel") {
  auto p = fixture_ex1();
  auto k = kernel_presentation(p, 0);
  CHECK(k.shared_vertices() == VertexSet{1});
  CHECK(k.coset_vertices() == VertexSet{2});
  REQUIRE(k.full_size());
  CHECK(*k.full_size() == 4);

  auto d = k.delta_presentation();
  CHECK(d.size() == 4);
  CHECK(d.graph().number_of_edges() == 3);
  CHECK(d.label(0) == "v2");
  CHECK(d.label(1) == "v3.0");
  for (vertex_type v = 1; v < 4; ++v) {
    CHECK(d.adjacent(0, v));
  }
}

TEST_CASE("psi and phi") {
  auto p = fixture_ex1();
  auto k = kernel_presentation(p, 0);

  CHECK(psi(k, NormalForm()).empty());
  CHECK(phi(k, NormalForm()).empty());

  auto w = el(p, "v1*v3*v1^-1");
  auto y = psi(k, w);
  auto d = k.delta_presentation();
  REQUIRE(y.size() == 1);
  CHECK(y[0].exponent == 1);
  CHECK(k.vertex(y[0].vertex).kind == DeltaVertex::Kind::coset);
  CHECK(k.vertex(y[0].vertex).u == 2);
  CHECK(phi(k, y) == w);
  CHECK(str(p, phi(k, generator(d, y[0].vertex))) == "v1*v3*v1^2");

  auto s = psi(k, el(p, "v2^3"));
  REQUIRE(s.size() == 1);
  CHECK(k.vertex(s[0].vertex).kind == DeltaVertex::Kind::shared);
  CHECK(s[0].exponent == 3);

  CHECK_THROWS_AS(psi(k, el(p, "v1")), std::invalid_argument);
}

TEST_CASE("commutator shrinks by two") {
  auto p = fixture_ex1();
  auto k = kernel_presentation(p, 0);
  auto w = el(p, "v1*v3*v1^-1*v3^-1");
  auto y = psi(k, w);
  CHECK(y.size() == 2);
  CHECK(phi(k, y) == w);
}

TEST_CASE("lazy realization for infinite vertex groups") {
  auto r = path_raag();
  auto k = kernel_presentation(r, 0);
  CHECK_FALSE(k.full_size());
  auto before = k.realized_size();
  auto w      = el(r, "a^5*c*a^-5*a^-2*c^-1*a^2");
  auto y      = psi(k, w);
  CHECK(k.realized_size() > before);
  CHECK(phi(k, y) == w);
  CHECK(k.find(DeltaVertex::coset_vertex(5, 2)));
  CHECK(k.delta_presentation().find("c.m2"));
}

TEST_CASE("vertex projection") {
  auto p = fixture_ex2gen();
  CHECK(vertex_projection(p, el(p, "a*c*a*c*a*c"), 0) == 0);
  CHECK(vertex_projection(p, el(p, "a*c*a"), 0) == 2);
  CHECK(vertex_projection(p, el(p, "c^-4"), 2) == -4);
}

TEST_CASE("compress") {
  auto r = path_raag();

  SUBCASE("fixed point") {
    auto X   = els(r, {"a", "b*c"});
    auto res = compress(r, X);
    CHECK(res.log.empty());
    CHECK(res.images == X);
    CHECK(res.presentation == r);
  }
  SUBCASE("projection onto the essential support") {
    auto X   = els(r, {"c*a*c^-1"});
    auto res = compress(r, X);
    CHECK(res.presentation.size() == 1);
    CHECK(res.presentation.label(0) == "a");
    CHECK(str(res.presentation, res.images[0]) == "a");
    CHECK(res.map(el(r, "c*a^3*c^-1")) == el(res.presentation, "a^3"));
  }
  SUBCASE("kernel stage on ex1") {
    auto p   = fixture_ex1();
    auto X   = els(p, {"v1*v3*v1^-1*v3^-1"});
    auto res = compress(p, X);
    REQUIRE(!res.log.empty());
    bool has_kernel = false;
    for (auto const& st : res.log) {
      has_kernel = has_kernel || st.kind == CompressStage::Kind::kernel;
    }
    CHECK(has_kernel);
    CHECK(total_length(res.images) < total_length(X));
  }
}
