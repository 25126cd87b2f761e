#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gpc/parabolic.hpp"
#include "gpc/words.hpp"

namespace gpc {

  // A vertex of the kernel graph Δ for the retraction onto a vertex a:
  // either a vertex u in B = link(a), shared by all cosets, or a pair (g, u)
  // with g ∈ G_a and u ∈ C = V - ({a} ∪ B).
  struct DeltaVertex {
    enum class Kind { shared, coset };

    Kind        kind = Kind::shared;
    vertex_type u    = 0;
    // Canonical exponent of the element of G_a; zero for shared vertices.
    Exponent g = 0;

    static DeltaVertex shared_vertex(vertex_type u) {
      return DeltaVertex{Kind::shared, u, 0};
    }
    static DeltaVertex coset_vertex(Exponent g, vertex_type u) {
      return DeltaVertex{Kind::coset, u, std::move(g)};
    }

    bool operator==(DeltaVertex const&) const = default;
  };

}  // namespace gpc

template <>
struct std::hash<gpc::DeltaVertex> {
  std::size_t operator()(gpc::DeltaVertex const& d) const noexcept;
};

namespace gpc {

  // ker ρ_a as a graph product over Δ. Vertices of Δ are realized on first
  // use and receive consecutive ids; the realized part is a full subgraph,
  // so words over it are faithful. Realization is thread-safe.
  class KernelPresentation {
   public:
    enum class Realization { lazy, eager };

    KernelPresentation(Presentation base, vertex_type a, Realization mode);

    Presentation const& base() const noexcept {
      return base_;
    }
    vertex_type a() const noexcept {
      return a_;
    }
    VertexSet shared_vertices() const noexcept {
      return B_;
    }
    VertexSet coset_vertices() const noexcept {
      return C_;
    }
    // |B| + |G_a|·|C| when G_a is finite.
    std::optional<Exponent> full_size() const;

    vertex_type                realize(DeltaVertex const& d);
    std::optional<vertex_type> find(DeltaVertex const& d) const;
    DeltaVertex                vertex(vertex_type id) const;
    std::size_t                realized_size() const;
    // Snapshot of Δ restricted to the realized vertices.
    Presentation delta_presentation() const;

   private:
    DeltaVertex normalized(DeltaVertex d) const;
    std::string fresh_label(DeltaVertex const& d) const;

    Presentation base_;
    vertex_type  a_;
    VertexSet    B_;
    VertexSet    C_;

    std::unique_ptr<std::shared_mutex>           mutex_;
    std::vector<DeltaVertex>                     vertices_;
    std::unordered_map<DeltaVertex, vertex_type> ids_;
    Presentation                                 delta_;
  };

  // Eager realization is used for finite G_a when Δ fits in a presentation,
  // ordering shared vertices first, then the coset vertices by g and u.
  KernelPresentation kernel_presentation(Presentation const& p, vertex_type a);

  // Syllable-wise rewriting of a word of the kernel. Throws
  // std::invalid_argument if ρ_a(w) is nontrivial.
  NormalForm psi(KernelPresentation& k, NormalForm const& w);

  // Inverse of psi. `w` must be a normal form over delta_presentation().
  NormalForm phi(KernelPresentation const& k, NormalForm const& w);

  // Exponent sum of `x` at vertex v, reduced in G_v; zero iff ρ_v(x) = 1.
  Exponent vertex_projection(Presentation const& p,
                             NormalForm const&   x,
                             vertex_type         v);

  struct CompressStage {
    enum class Kind { projection, kernel };

    Kind kind = Kind::projection;
    // Presentation and images after this stage.
    Presentation            presentation;
    std::vector<NormalForm> images;

    // projection: images are conjugator^-1 X conjugator, relabelled onto
    // the essential support.
    NormalForm               conjugator;
    VertexSet                essential_support;
    std::vector<vertex_type> to_parent;

    // kernel: the retraction vertex and the Δ used.
    vertex_type                         vertex = 0;
    std::shared_ptr<KernelPresentation> kernel;
  };

  struct CompressResult {
    Presentation               input;
    Presentation               presentation;
    std::vector<NormalForm>    images;
    std::vector<CompressStage> log;
    bool                       budget_exhausted = false;

    // Image of an element of ⟨X⟩. Throws std::invalid_argument when the
    // element is detected to lie outside ⟨X⟩'s chain of domains.
    NormalForm map(NormalForm const& x) const;
  };

  // Alternates projection onto the essential support with passing to the
  // kernel of a vertex retraction that kills every element, until neither
  // applies.
  CompressResult compress(Presentation const&         p,
                          std::span<NormalForm const> X,
                          std::optional<std::size_t>  budget = std::nullopt);

}  // namespace gpc
