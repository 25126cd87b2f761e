#include "gpc/bassserre.hpp"

#include <stdexcept>

#include "gpc/parabolic.hpp"

namespace gpc {

  Splitting split_at(Presentation const& p, vertex_type v) {
    if (p.size() < 2) {
      throw std::invalid_argument("split_at: needs at least two vertices");
    }
    check_vertex(v, p.size());
    Splitting s;
    s.v          = v;
    s.A          = p.vertices() - VertexSet{v};
    s.C          = p.graph().neighbours(v);
    s.B          = s.C | VertexSet{v};
    s.degenerate = s.C == s.A;
    return s;
  }

  namespace {
    void require_proper(Splitting const& s) {
      if (s.degenerate) {
        throw std::invalid_argument(
            "degenerate splitting: the vertex is adjacent to every other");
      }
    }

    // Removes and returns the largest prefix of `rest` supported in S.
    NormalForm peel(Presentation const& p, NormalForm& rest, VertexSet S) {
      Word taken;
      while (true) {
        auto movable = first_vertices(p, rest) & S;
        if (movable.empty()) {
          break;
        }
        auto pos = *first_position(rest, movable.front());
        taken.push_back(rest[pos]);
        rest = erase_syllable(p, rest, pos);
      }
      return reduce(p, taken);
    }
  }  // namespace

  AlternatingForm alternating_form(Presentation const& p,
                                   Splitting const&    s,
                                   NormalForm const&   x) {
    require_proper(s);
    AlternatingForm result;
    NormalForm      rest = x;
    result.prefix        = peel(p, rest, s.C);
    if (rest.empty()) {
      return result;
    }
    // Exactly one side can start: a front-movable v and a front-movable
    // vertex of A - C would have to commute.
    Side side = (first_vertices(p, rest) & s.A).empty() ? Side::B : Side::A;
    while (!rest.empty()) {
      auto block = peel(p, rest, side == Side::A ? s.A : s.B);
      result.factors.push_back({side, std::move(block)});
      side = side == Side::A ? Side::B : Side::A;
    }
    return result;
  }

  TreeAction classify_action(Presentation const& p,
                             Splitting const&    s,
                             NormalForm const&   x) {
    require_proper(s);
    auto const  core = cyclically_reduce(p, x).core;
    auto const  form = alternating_form(p, s, core);
    std::size_t n    = form.factors.size();
    // The last and first factors sit on the same side when n is odd and
    // merge cyclically.
    if (n % 2 == 1) {
      --n;
    }
    return n == 0 ? TreeAction{} : TreeAction{false, n};
  }

}  // namespace gpc
