#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gpc/vertex_set.hpp"

namespace gpc {

  // A finite simplicial graph stored as a dense adjacency bit-matrix: one
  // VertexSet row per vertex. No loops, no multiple edges.
  class SimplicialGraph {
   public:
    using edge_type = std::pair<vertex_type, vertex_type>;

    SimplicialGraph() = default;
    explicit SimplicialGraph(std::size_t n);
    SimplicialGraph(std::size_t n, std::vector<edge_type> const& edges);

    // Throws std::invalid_argument on self-loops, std::out_of_range on bad ids.
    // Adding an existing edge is a no-op.
    void add_edge(vertex_type u, vertex_type v);

    std::size_t size() const noexcept {
      return rows_.size();
    }
    VertexSet vertices() const noexcept {
      return VertexSet::range(rows_.size());
    }
    bool adjacent(vertex_type u, vertex_type v) const {
      check_vertex(u, size());
      return rows_[u].contains(v);
    }
    VertexSet neighbours(vertex_type v) const {
      check_vertex(v, size());
      return rows_[v];
    }
    std::size_t number_of_edges() const noexcept;
    std::vector<edge_type> edges() const;

    bool operator==(SimplicialGraph const&) const = default;

   private:
    std::vector<VertexSet> rows_;
  };

  // Vertices adjacent to every member of `A`; link of the empty set is V.
  VertexSet link(SimplicialGraph const& graph, VertexSet A);

  struct InducedSubgraph {
    SimplicialGraph graph;
    // new id -> old id
    std::vector<vertex_type> to_parent;
    // old id -> new id, for members of the chosen set
    std::vector<std::optional<vertex_type>> from_parent;
  };

  InducedSubgraph full_subgraph(SimplicialGraph const& graph, VertexSet A);

  SimplicialGraph complement(SimplicialGraph const& graph);

  // Connected component of `graph` containing `v`.
  VertexSet component(SimplicialGraph const& graph, vertex_type v);

  bool is_connected(SimplicialGraph const& graph);

  // A graph is irreducible iff its complement is connected. The empty graph
  // and the one-vertex graph both count as irreducible.
  bool is_irreducible(SimplicialGraph const& graph);

  // For a reducible graph returns (A, B) with V = A ⊔ B and B = link(A), where
  // A is the complement component containing the smallest vertex id.
  std::optional<std::pair<VertexSet, VertexSet>>
  split_reducible(SimplicialGraph const& graph);

  // A vertex whose removal leaves an irreducible graph, i.e. a non-cut vertex
  // of the complement. Returns the smallest such id. Throws
  // std::invalid_argument if the graph is empty or reducible.
  vertex_type find_noncut_vertex(SimplicialGraph const& graph);

}  // namespace gpc
