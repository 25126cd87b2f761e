#include <doctest.h>

#include "gpc/graph.hpp"

using namespace gpc;

namespace {
  SimplicialGraph path3() {
    return SimplicialGraph(3, {{0, 1}, {1, 2}});
  }
  SimplicialGraph square() {
    return SimplicialGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  }
}  // namespace

TEST_CASE("link") {
  auto g = path3();
  CHECK(link(g, {1}) == VertexSet{0, 2});
  CHECK(link(g, {0, 2}) == VertexSet{1});
  CHECK(link(g, {}) == g.vertices());
  CHECK(link(SimplicialGraph(3), {}) == VertexSet{0, 1, 2});
}

TEST_CASE("full subgraph") {
  auto ends = full_subgraph(path3(), {0, 2});
  CHECK(ends.graph.size() == 2);
  CHECK(ends.graph.number_of_edges() == 0);
  CHECK(ends.to_parent == std::vector<vertex_type>{0, 2});
  CHECK(!ends.from_parent[1]);

  auto all = full_subgraph(path3(), {0, 1, 2});
  CHECK(all.graph == path3());
  CHECK(all.to_parent == std::vector<vertex_type>{0, 1, 2});

  auto three = full_subgraph(square(), {0, 1, 2});
  CHECK(three.graph == path3());
}

TEST_CASE("complement") {
  CHECK(complement(SimplicialGraph(3)).number_of_edges() == 3);
  CHECK(complement(SimplicialGraph(3, {{0, 1}, {1, 2}, {0, 2}})).number_of_edges() == 0);
  auto c = complement(path3());
  CHECK(c.number_of_edges() == 1);
  CHECK(c.adjacent(0, 2));
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible(path3()));
  CHECK(is_irreducible(SimplicialGraph(2)));
  CHECK_FALSE(is_irreducible(SimplicialGraph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(is_irreducible(SimplicialGraph(1)));
  CHECK(is_irreducible(SimplicialGraph(0)));

  auto s = split_reducible(path3());
  REQUIRE(s);
  CHECK(s->first == VertexSet{0, 2});
  CHECK(s->second == VertexSet{1});

  auto q = split_reducible(square());
  REQUIRE(q);
  CHECK(q->first == VertexSet{0, 2});
  CHECK(q->second == VertexSet{1, 3});

  CHECK_FALSE(split_reducible(SimplicialGraph(2)));
}

TEST_CASE("non-cut vertex") {
  CHECK(find_noncut_vertex(SimplicialGraph(3)) == 0);
  CHECK(find_noncut_vertex(SimplicialGraph(1)) == 0);
  CHECK_THROWS_AS(find_noncut_vertex(path3()), std::invalid_argument);
  CHECK_THROWS_AS(find_noncut_vertex(SimplicialGraph(0)), std::invalid_argument);

  // complement is the path 0 - 2 - 1 - 3
  SimplicialGraph g(4, {{0, 1}, {2, 3}, {0, 3}});
  auto v = find_noncut_vertex(g);
  auto rest = full_subgraph(g, g.vertices() - VertexSet{v});
  CHECK(is_irreducible(rest.graph));
}

TEST_CASE("edges are validated") {
  SimplicialGraph g(2);
  CHECK_THROWS(g.add_edge(0, 0));
  CHECK_THROWS(g.add_edge(0, 5));
}
