#include "gpc/graph.hpp"

#include <stdexcept>

namespace gpc {

  SimplicialGraph::SimplicialGraph(std::size_t n) : rows_(n) {
    if (n > max_vertices) {
      throw std::length_error("graphs are limited to "
                              + std::to_string(max_vertices) + " vertices");
    }
  }

  SimplicialGraph::SimplicialGraph(std::size_t                  n,
                                   std::vector<edge_type> const& edges)
      : SimplicialGraph(n) {
    for (auto const& [u, v] : edges) {
      add_edge(u, v);
    }
  }

  void SimplicialGraph::add_edge(vertex_type u, vertex_type v) {
    check_vertex(u, size());
    check_vertex(v, size());
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    rows_[u].insert(v);
    rows_[v].insert(u);
  }

  std::size_t SimplicialGraph::number_of_edges() const noexcept {
    std::size_t twice = 0;
    for (auto const& row : rows_) {
      twice += row.size();
    }
    return twice / 2;
  }

  std::vector<SimplicialGraph::edge_type> SimplicialGraph::edges() const {
    std::vector<edge_type> result;
    for (vertex_type u = 0; u < size(); ++u) {
      for (auto v : rows_[u]) {
        if (u < v) {
          result.emplace_back(u, v);
        }
      }
    }
    return result;
  }

  VertexSet link(SimplicialGraph const& graph, VertexSet A) {
    if (!A.is_subset_of(graph.vertices())) {
      throw std::out_of_range("vertex set not contained in the graph");
    }
    VertexSet result = graph.vertices();
    for (auto v : A) {
      result &= graph.neighbours(v);
    }
    return result;
  }

  InducedSubgraph full_subgraph(SimplicialGraph const& graph, VertexSet A) {
    if (!A.is_subset_of(graph.vertices())) {
      throw std::out_of_range("vertex set not contained in the graph");
    }
    InducedSubgraph result;
    result.from_parent.assign(graph.size(), std::nullopt);
    for (auto v : A) {
      result.from_parent[v] = static_cast<vertex_type>(result.to_parent.size());
      result.to_parent.push_back(v);
    }
    result.graph = SimplicialGraph(result.to_parent.size());
    for (vertex_type i = 0; i < result.to_parent.size(); ++i) {
      for (auto w : graph.neighbours(result.to_parent[i]) & A) {
        result.graph.add_edge(i, *result.from_parent[w]);
      }
    }
    return result;
  }

  SimplicialGraph complement(SimplicialGraph const& graph) {
    SimplicialGraph result(graph.size());
    for (vertex_type u = 0; u < graph.size(); ++u) {
      for (vertex_type v = u + 1; v < graph.size(); ++v) {
        if (!graph.adjacent(u, v)) {
          result.add_edge(u, v);
        }
      }
    }
    return result;
  }

  VertexSet component(SimplicialGraph const& graph, vertex_type v) {
    check_vertex(v, graph.size());
    VertexSet seen     = VertexSet::singleton(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (auto u : frontier) {
        next |= graph.neighbours(u);
      }
      frontier = next - seen;
      seen |= frontier;
    }
    return seen;
  }

  bool is_connected(SimplicialGraph const& graph) {
    return graph.size() == 0 || component(graph, 0) == graph.vertices();
  }

  bool is_irreducible(SimplicialGraph const& graph) {
    return is_connected(complement(graph));
  }

  std::optional<std::pair<VertexSet, VertexSet>>
  split_reducible(SimplicialGraph const& graph) {
    if (graph.size() == 0) {
      return std::nullopt;
    }
    VertexSet A = component(complement(graph), 0);
    if (A == graph.vertices()) {
      return std::nullopt;
    }
    return std::make_pair(A, graph.vertices() - A);
  }

  vertex_type find_noncut_vertex(SimplicialGraph const& graph) {
    if (graph.size() == 0) {
      throw std::invalid_argument("find_noncut_vertex: empty graph");
    }
    if (!is_irreducible(graph)) {
      throw std::invalid_argument("find_noncut_vertex: graph is reducible");
    }
    for (vertex_type v = 0; v < graph.size(); ++v) {
      auto rest = full_subgraph(graph, graph.vertices() - VertexSet{v});
      if (is_irreducible(rest.graph)) {
        return v;
      }
    }
    // Every finite connected graph has a non-cut vertex.
    throw std::logic_error("find_noncut_vertex: no non-cut vertex found");
  }

}  // namespace gpc
