#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpc/words.hpp"

namespace gpc {

  // A word in the free group on two letters x, y: 1 = x, -1 = x^-1,
  // 2 = y, -2 = y^-1.
  using FreeWord = std::vector<int>;

  NormalForm evaluate(Presentation const& p,
                      FreeWord const&     w,
                      NormalForm const&   x,
                      NormalForm const&   y);

  std::string to_string(FreeWord const& w);

  bool is_abelian(Presentation const& p, std::span<NormalForm const> X);

  struct AbelianRank {
    std::size_t rank = 0;
    // The lattice still grew at the last doubling of the exponent bound.
    bool bound_limited = false;
    // ⟨X⟩ has a nontrivial element of finite order; rank is that of the
    // free part.
    bool        torsion = false;
    std::size_t bound   = 0;
  };

  // Rank of the abelian group ⟨X⟩: |X| minus the rank of the lattice of
  // integer relations. Exact when support(X) spans a complete graph;
  // otherwise relations with coefficients up to the bound are enumerated,
  // doubling the bound until the lattice is stable (at most 64).
  AbelianRank abelian_rank(Presentation const&         p,
                           std::span<NormalForm const> X,
                           std::size_t                 exponent_bound = 8);

  // Shortest nontrivial reduced word of length at most max_length that
  // evaluates to the identity, searching words in length then letter order
  // (x, x^-1, y, y^-1).
  std::optional<FreeWord> find_relation(Presentation const& p,
                                        NormalForm const&   x,
                                        NormalForm const&   y,
                                        std::size_t         max_length);

  struct ClassifyOptions {
    std::size_t                candidate_length = 6;  // L
    std::size_t                relation_length  = 6;  // R
    std::size_t                exponent_bound   = 8;
    std::size_t                max_pairs        = 2000;
    std::optional<std::size_t> budget;
  };

  struct Verdict {
    enum class Kind {
      trivial,
      finite_cyclic,
      infinite_cyclic,
      free_abelian,
      infinite_dihedral,
      contains_free,
      unknown
    };

    Kind        kind = Kind::unknown;
    Exponent    order;     // finite_cyclic
    std::size_t rank = 0;  // free_abelian
    bool        bound_limited = false;
    // contains_free and infinite_dihedral, over the input presentation.
    std::optional<std::pair<NormalForm, NormalForm>> witness;
    bool                                             certified = false;
    std::string                                      reason;

    // Set when the free-pair search ran.
    struct Search {
      std::size_t candidate_length = 0;
      std::size_t relation_length  = 0;
      std::size_t pairs_tested     = 0;
      // Relation found for the first non-commuting pair of generators.
      std::optional<FreeWord> generator_relation;
    };
    std::optional<Search> search;
    bool                  budget_exhausted = false;
  };

  std::string to_string(Verdict::Kind k);

  Verdict classify(Presentation const&         p,
                   std::span<NormalForm const> X,
                   ClassifyOptions const&      options = {});

}  // namespace gpc
