#include "gpc/parabolic.hpp"

#include <stdexcept>

namespace gpc {

  NormalForm erase_syllable(Presentation const& p,
                            NormalForm const&   x,
                            std::size_t         pos) {
    Word w = x.word();
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos));
    return reduce(p, w);
  }

  NormalForm retraction(Presentation const& p, VertexSet A, NormalForm const& x) {
    if (!A.is_subset_of(p.vertices())) {
      throw std::out_of_range("retraction: vertex set not in presentation");
    }
    Word w;
    for (auto const& s : x.syllables()) {
      if (A.contains(s.vertex)) {
        w.push_back(s);
      }
    }
    return reduce(p, w);
  }

  ParabolicSubgroup canonicalize(Presentation const& p,
                                 NormalForm const&   g,
                                 VertexSet           S) {
    if (!S.is_subset_of(p.vertices())) {
      throw std::out_of_range("canonicalize: vertex set not in presentation");
    }
    VertexSet const N    = S | link(p.graph(), S);
    NormalForm      rest = g;
    while (true) {
      auto strippable = last_vertices(p, rest) & N;
      if (strippable.empty()) {
        break;
      }
      rest = erase_syllable(p, rest, *last_position(rest, strippable.front()));
    }
    return ParabolicSubgroup(std::move(rest), S);
  }

  bool element_in_parabolic(Presentation const&      p,
                            NormalForm const&        x,
                            ParabolicSubgroup const& P) {
    return support(conjugate(p, x, P.conjugator())).is_subset_of(P.base());
  }

  bool parabolic_contains(Presentation const&      p,
                          ParabolicSubgroup const& P1,
                          ParabolicSubgroup const& P2) {
    if (!P2.base().is_subset_of(P1.base())) {
      return false;
    }
    auto const g2_inv = invert(p, P2.conjugator());
    for (auto t : P2.base()) {
      auto gen = conjugate(p, generator(p, t), g2_inv);
      if (!element_in_parabolic(p, gen, P1)) {
        return false;
      }
    }
    return true;
  }

  ParabolicSubgroup intersect(Presentation const&      p,
                              ParabolicSubgroup const& P1,
                              ParabolicSubgroup const& P2) {
    VertexSet const S = P1.base();
    VertexSet const T = P2.base();
    // Conjugating by g2^-1 turns P2 into G_T and P1 into g G_S g^-1.
    NormalForm rest = multiply(p, invert(p, P2.conjugator()), P1.conjugator());

    // g = h g' with supp(h) ⊆ T and fv(g') ∩ T = ∅.
    Word h;
    while (true) {
      auto movable = first_vertices(p, rest) & T;
      if (movable.empty()) {
        break;
      }
      auto pos = *first_position(rest, movable.front());
      h.push_back(rest[pos]);
      rest = erase_syllable(p, rest, pos);
    }
    // Drop suffixes of g' lying in G_S, so lv(g') ∩ S = ∅.
    while (true) {
      auto movable = last_vertices(p, rest) & S;
      if (movable.empty()) {
        break;
      }
      rest = erase_syllable(p, rest, *last_position(rest, movable.front()));
    }
    VertexSet const Q = S & link(p.graph(), support(rest));
    VertexSet const P = Q & T;
    return canonicalize(p, multiply(p, P2.conjugator(), reduce(p, h)), P);
  }

  ParabolicSubgroup normalizer(Presentation const&      p,
                               ParabolicSubgroup const& P) {
    if (P.is_trivial()) {
      throw std::invalid_argument(
          "normalizer: the trivial parabolic subgroup is not supported");
    }
    return canonicalize(p,
                        P.conjugator(),
                        P.base() | link(p.graph(), P.base()));
  }

  Descent descend(Presentation const&         p,
                  std::span<NormalForm const> X,
                  std::optional<std::size_t>  budget) {
    std::size_t const limit = budget.value_or(default_budget(X));
    Descent           result;
    result.reduced.assign(X.begin(), X.end());
    std::size_t current = total_length(result.reduced);

    while (true) {
      // Candidate moves: the syllables that can be brought to the front of
      // some element.
      std::vector<Syllable> candidates;
      for (auto const& y : result.reduced) {
        for (auto v : first_vertices(p, y)) {
          candidates.push_back(y[*first_position(y, v)]);
        }
      }
      std::optional<Syllable>                best;
      std::size_t                            best_length = current;
      std::vector<NormalForm>                best_state;
      for (auto const& s : candidates) {
        if (best && best_length < current && s.vertex == best->vertex
            && s.exponent == best->exponent) {
          continue;
        }
        auto                    by = generator(p, s.vertex, s.exponent);
        std::vector<NormalForm> next;
        next.reserve(result.reduced.size());
        for (auto const& y : result.reduced) {
          next.push_back(conjugate(p, y, by));
        }
        std::size_t len = total_length(next);
        bool better = len < best_length
                      || (best && len == best_length && len < current
                          && (s.vertex < best->vertex
                              || (s.vertex == best->vertex
                                  && s.exponent < best->exponent)));
        if (better) {
          best        = s;
          best_length = len;
          best_state  = std::move(next);
        }
      }
      if (!best) {
        return result;
      }
      if (result.steps == limit) {
        result.budget_exhausted = true;
        return result;
      }
      result.conjugator = multiply(
          p, result.conjugator, generator(p, best->vertex, best->exponent));
      result.reduced = std::move(best_state);
      current        = best_length;
      ++result.steps;
    }
  }

  ConjugatorSearch conjugate_into_full(Presentation const&         p,
                                       std::span<NormalForm const> X,
                                       VertexSet                   S,
                                       std::optional<std::size_t>  budget) {
    auto             d = descend(p, X, budget);
    ConjugatorSearch result;
    if (support(d.reduced).is_subset_of(S)) {
      result.status     = ConjugatorSearch::Status::found;
      result.conjugator = std::move(d.conjugator);
      for (auto const& x : X) {
        if (!support(conjugate(p, x, *result.conjugator)).is_subset_of(S)) {
          throw std::logic_error("conjugate_into_full: unverified conjugator");
        }
      }
    } else if (d.budget_exhausted) {
      result.status = ConjugatorSearch::Status::budget_exhausted;
    } else {
      result.status = ConjugatorSearch::Status::impossible;
    }
    return result;
  }

  Closure parabolic_closure(Presentation const&         p,
                            std::span<NormalForm const> X,
                            std::optional<std::size_t>  budget) {
    auto d = descend(p, X, budget);
    return Closure{canonicalize(p, d.conjugator, support(d.reduced)),
                   d.budget_exhausted};
  }

  VertexSet essential_support(Presentation const&         p,
                              std::span<NormalForm const> X,
                              std::optional<std::size_t>  budget) {
    return parabolic_closure(p, X, budget).subgroup.base();
  }

}  // namespace gpc
