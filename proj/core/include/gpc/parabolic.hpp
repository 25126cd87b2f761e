#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gpc/vertex_set.hpp"
#include "gpc/words.hpp"

namespace gpc {

  // The subgroup g G_S g^-1, stored canonically: g is the shortest element of
  // its coset g G_{S ∪ link(S)}, which is the normalizer of G_S. Two values
  // are equal iff they denote the same subgroup.
  class ParabolicSubgroup {
   public:
    // The trivial subgroup.
    ParabolicSubgroup() = default;

    NormalForm const& conjugator() const noexcept {
      return conjugator_;
    }
    VertexSet base() const noexcept {
      return base_;
    }
    bool is_trivial() const noexcept {
      return base_.empty();
    }

    bool operator==(ParabolicSubgroup const&) const = default;

   private:
    friend ParabolicSubgroup canonicalize(Presentation const&,
                                          NormalForm const&,
                                          VertexSet);
    ParabolicSubgroup(NormalForm g, VertexSet S)
        : conjugator_(std::move(g)), base_(S) {}

    NormalForm conjugator_;
    VertexSet  base_;
  };

  // The canonical retraction onto G_A: deletes syllables outside A.
  NormalForm retraction(Presentation const& p, VertexSet A, NormalForm const& x);

  ParabolicSubgroup canonicalize(Presentation const& p,
                                 NormalForm const&   g,
                                 VertexSet           S);

  inline ParabolicSubgroup full_subgroup(Presentation const& p, VertexSet S) {
    return canonicalize(p, NormalForm(), S);
  }

  bool element_in_parabolic(Presentation const&      p,
                            NormalForm const&        x,
                            ParabolicSubgroup const& P);

  inline bool parabolic_equal(ParabolicSubgroup const& P1,
                              ParabolicSubgroup const& P2) {
    return P1 == P2;
  }

  // True if P2 is a subgroup of P1.
  bool parabolic_contains(Presentation const&      p,
                          ParabolicSubgroup const& P1,
                          ParabolicSubgroup const& P2);

  ParabolicSubgroup intersect(Presentation const&      p,
                              ParabolicSubgroup const& P1,
                              ParabolicSubgroup const& P2);

  // g G_{S ∪ link(S)} g^-1. Throws std::invalid_argument on the trivial
  // subgroup.
  ParabolicSubgroup normalizer(Presentation const& p, ParabolicSubgroup const& P);

  // Result of shortening a finite set by simultaneous conjugation: X equals
  // conjugator * reduced * conjugator^-1 elementwise.
  struct Descent {
    NormalForm              conjugator;
    std::vector<NormalForm> reduced;
    std::size_t             steps            = 0;
    bool                    budget_exhausted = false;
  };

  inline std::size_t default_budget(std::span<NormalForm const> X) {
    return total_length(X) + 4;
  }

  // Conjugates X one syllable at a time, always taking the move that
  // decreases the total length the most (ties: smallest vertex, then
  // exponent), until no single syllable decreases it. At that point the
  // support of `reduced` is contained in S whenever X lies in some conjugate
  // of G_S. Stops early after `budget` moves.
  Descent descend(Presentation const&         p,
                  std::span<NormalForm const> X,
                  std::optional<std::size_t>  budget = std::nullopt);

  struct ConjugatorSearch {
    enum class Status { found, impossible, budget_exhausted };

    Status                    status = Status::impossible;
    std::optional<NormalForm> conjugator;
  };

  // Looks for g with support(g^-1 x g) ⊆ S for every x in X. A returned
  // conjugator is always verified.
  ConjugatorSearch conjugate_into_full(Presentation const&         p,
                                       std::span<NormalForm const> X,
                                       VertexSet                   S,
                                       std::optional<std::size_t> budget
                                       = std::nullopt);

  struct Closure {
    ParabolicSubgroup subgroup;
    // If set, `subgroup` contains X but may not be minimal.
    bool budget_exhausted = false;
  };

  Closure parabolic_closure(Presentation const&         p,
                            std::span<NormalForm const> X,
                            std::optional<std::size_t>  budget = std::nullopt);

  VertexSet essential_support(Presentation const&         p,
                              std::span<NormalForm const> X,
                              std::optional<std::size_t>  budget = std::nullopt);

  // Removes the syllable at `pos`; the caller guarantees it can be shuffled
  // to one end of the word.
  NormalForm erase_syllable(Presentation const& p,
                            NormalForm const&   x,
                            std::size_t         pos);

}  // namespace gpc
