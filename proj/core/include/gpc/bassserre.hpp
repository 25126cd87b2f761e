#pragma once

#include <cstddef>
#include <vector>

#include "gpc/words.hpp"

namespace gpc {

  // G = G_A *_{G_C} G_B with A = V - {v}, C = link(v), B = C ∪ {v}.
  struct Splitting {
    vertex_type v = 0;
    VertexSet   A;
    VertexSet   B;
    VertexSet   C;
    // C = A: v is a cone vertex and G = G_A × G_v.
    bool degenerate = false;
  };

  // Throws std::invalid_argument if the presentation has fewer than two
  // vertices.
  Splitting split_at(Presentation const& p, vertex_type v);

  enum class Side { A, B };

  struct AlternatingForm {
    struct Factor {
      Side       side;
      NormalForm element;
    };

    NormalForm          prefix;  // in G_C
    std::vector<Factor> factors;
  };

  // x = prefix * factors[0] * ... with factors alternating between
  // G_A - G_C and G_B - G_C. Each factor is the longest possible block.
  // Throws std::invalid_argument on a degenerate splitting.
  AlternatingForm alternating_form(Presentation const& p,
                                   Splitting const&    s,
                                   NormalForm const&   x);

  struct TreeAction {
    bool elliptic = true;
    // Zero when elliptic.
    std::size_t translation_length = 0;
  };

  TreeAction classify_action(Presentation const& p,
                             Splitting const&    s,
                             NormalForm const&   x);

}  // namespace gpc
