#include "gpc/words.hpp"

#include <algorithm>
#include <stdexcept>


namespace gpc {

  CyclicOrder CyclicOrder::finite(Exponent n) {
    if (n < 2) {
      throw std::invalid_argument("cyclic vertex group order must be >= 2, got "
                                  + n.str());
    }
    CyclicOrder result;
    result.order_ = std::move(n);
    return result;
  }

  Exponent CyclicOrder::canonical(Exponent const& e) const {
    if (!is_finite()) {
      return e;
    }
    Exponent r = e % order_;
    if (r < 0) {
      r += order_;
    }
    return r;
  }

  Syllable::Syllable(vertex_type v, Exponent e)
      : vertex(v), exponent(std::move(e)) {
    if (exponent == 0) {
      throw std::invalid_argument("syllable exponent must be nonzero");
    }
  }

  bool NormalForm::operator<(NormalForm const& other) const {
    if (size() != other.size()) {
      return size() < other.size();
    }
    for (std::size_t i = 0; i < size(); ++i) {
      auto const& a = syllables_[i];
      auto const& b = other.syllables_[i];
      if (a.vertex != b.vertex) {
        return a.vertex < b.vertex;
      }
      if (a.exponent != b.exponent) {
        return a.exponent < b.exponent;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  vertex_type Presentation::add_vertex(std::string label, CyclicOrder order) {
    if (label.empty()) {
      throw std::invalid_argument("vertex label must be nonempty");
    }
    if (find(label)) {
      throw std::invalid_argument("duplicate vertex label '" + label + "'");
    }
    if (size() >= max_vertices) {
      throw std::length_error("presentations are limited to "
                              + std::to_string(max_vertices) + " vertices");
    }
    auto edges = graph_.edges();
    graph_     = SimplicialGraph(size() + 1, edges);
    orders_.push_back(std::move(order));
    labels_.push_back(std::move(label));
    return static_cast<vertex_type>(size() - 1);
  }

  void Presentation::add_edge(vertex_type u, vertex_type v) {
    graph_.add_edge(u, v);
  }

  std::optional<vertex_type> Presentation::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      return std::nullopt;
    }
    return static_cast<vertex_type>(it - labels_.begin());
  }

  bool Presentation::torsion_free_on(VertexSet A) const {
    return std::none_of(A.begin(), A.end(), [this](vertex_type v) {
      return orders_[v].is_finite();
    });
  }

  SubPresentation full_subpresentation(Presentation const& p, VertexSet A) {
    auto            sub = full_subgraph(p.graph(), A);
    SubPresentation result;
    for (auto v : sub.to_parent) {
      result.presentation.add_vertex(p.label(v), p.order(v));
    }
    for (auto [u, v] : sub.graph.edges()) {
      result.presentation.add_edge(u, v);
    }
    result.to_parent   = std::move(sub.to_parent);
    result.from_parent = std::move(sub.from_parent);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Appends s to a reduced word, keeping it reduced: s joins the nearest
    // syllable of its vertex group reachable through commuting syllables.
    // Removing a syllable that became trivial cannot create a new joinable
    // pair, because it commuted with everything to its right.
    void append_reduced(Presentation const& p, Word& out, Syllable s) {
      auto const& order = p.order(s.vertex);
      s.exponent        = order.canonical(s.exponent);
      if (s.exponent == 0) {
        return;
      }
      auto const nbrs = p.graph().neighbours(s.vertex);
      for (std::size_t i = out.size(); i-- > 0;) {
        if (out[i].vertex == s.vertex) {
          Exponent e = order.canonical(out[i].exponent + s.exponent);
          if (e == 0) {
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          } else {
            out[i].exponent = std::move(e);
          }
          return;
        }
        if (!nbrs.contains(out[i].vertex)) {
          break;
        }
      }
      out.push_back(std::move(s));
    }

    // Reorders a reduced word into the lexicographically least vertex
    // sequence among its shuffles: repeatedly emit the smallest vertex whose
    // syllable commutes with everything still in front of it.
    Word canonical_order(Presentation const& p, Word w) {
      Word result;
      result.reserve(w.size());
      std::vector<bool> used(w.size(), false);
      for (std::size_t emitted = 0; emitted < w.size(); ++emitted) {
        VertexSet   before;
        std::size_t best = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (used[i]) {
            continue;
          }
          auto v = w[i].vertex;
          if ((before - p.graph().neighbours(v)).empty()
              && (best == w.size() || v < w[best].vertex)) {
            best = i;
          }
          before.insert(v);
        }
        used[best] = true;
        result.push_back(std::move(w[best]));
      }
      return result;
    }

    void check_belongs(Presentation const& p, NormalForm const& x) {
      if (!belongs_to(p, x)) {
        throw std::invalid_argument(
            "normal form does not belong to this presentation");
      }
    }
  }  // namespace

  NormalForm reduce(Presentation const& p, Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto const& s : w) {
      check_vertex(s.vertex, p.size());
      append_reduced(p, out, s);
    }
    return NormalForm(canonical_order(p, std::move(out)));
  }

  bool belongs_to(Presentation const& p, NormalForm const& x) {
    for (auto const& s : x.syllables()) {
      if (s.vertex >= p.size()) {
        return false;
      }
      auto const& o = p.order(s.vertex);
      if (o.is_finite() && (s.exponent <= 0 || s.exponent >= o.order())) {
        return false;
      }
    }
    return true;
  }

  NormalForm generator(Presentation const& p, vertex_type v, Exponent e) {
    check_vertex(v, p.size());
    if (e == 0) {
      return NormalForm();
    }
    return reduce(p, Word{Syllable(v, std::move(e))});
  }

  NormalForm multiply(Presentation const& p,
                      NormalForm const&   x,
                      NormalForm const&   y) {
    check_belongs(p, x);
    check_belongs(p, y);
    Word w = x.word();
    w.insert(w.end(), y.word().begin(), y.word().end());
    return reduce(p, w);
  }

  Word inverse_word(Word const& w) {
    Word result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.emplace_back(it->vertex, -it->exponent);
    }
    return result;
  }

  NormalForm invert(Presentation const& p, NormalForm const& x) {
    check_belongs(p, x);
    return reduce(p, inverse_word(x.word()));
  }

  NormalForm power(Presentation const& p, NormalForm const& x, Exponent k) {
    NormalForm base = x;
    if (k < 0) {
      base = invert(p, x);
      k    = -k;
    }
    NormalForm result;
    while (k > 0) {
      if ((k & 1) != 0) {
        result = multiply(p, result, base);
      }
      k >>= 1;
      if (k > 0) {
        base = multiply(p, base, base);
      }
    }
    return result;
  }

  NormalForm conjugate(Presentation const& p,
                       NormalForm const&   x,
                       NormalForm const&   by) {
    check_belongs(p, x);
    check_belongs(p, by);
    Word w = inverse_word(by.word());
    w.insert(w.end(), x.word().begin(), x.word().end());
    w.insert(w.end(), by.word().begin(), by.word().end());
    return reduce(p, w);
  }

  bool commute(Presentation const& p, NormalForm const& x, NormalForm const& y) {
    return multiply(p, x, y) == multiply(p, y, x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Supports, first and last vertices
  ////////////////////////////////////////////////////////////////////////

  VertexSet support(NormalForm const& x) {
    VertexSet result;
    for (auto const& s : x.syllables()) {
      result.insert(s.vertex);
    }
    return result;
  }

  VertexSet support(std::span<NormalForm const> X) {
    VertexSet result;
    for (auto const& x : X) {
      result |= support(x);
    }
    return result;
  }

  std::size_t total_length(std::span<NormalForm const> X) {
    std::size_t result = 0;
    for (auto const& x : X) {
      result += x.size();
    }
    return result;
  }

  VertexSet first_vertices(Presentation const& p, NormalForm const& x) {
    VertexSet result;
    VertexSet before;
    for (auto const& s : x.syllables()) {
      if ((before - p.graph().neighbours(s.vertex)).empty()) {
        result.insert(s.vertex);
      }
      before.insert(s.vertex);
    }
    return result;
  }

  VertexSet last_vertices(Presentation const& p, NormalForm const& x) {
    VertexSet result;
    VertexSet after;
    auto      syl = x.syllables();
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
      if ((after - p.graph().neighbours(it->vertex)).empty()) {
        result.insert(it->vertex);
      }
      after.insert(it->vertex);
    }
    return result;
  }

  std::optional<std::size_t> first_position(NormalForm const& x,
                                            vertex_type       v) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].vertex == v) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> last_position(NormalForm const& x,
                                           vertex_type       v) {
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i].vertex == v) {
        return i;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclic reduction and order
  ////////////////////////////////////////////////////////////////////////

  CyclicReduction cyclically_reduce(Presentation const& p, NormalForm const& x) {
    check_belongs(p, x);
    CyclicReduction result{NormalForm(), x};
    while (true) {
      auto const both = first_vertices(p, result.core)
                        & last_vertices(p, result.core);
      std::optional<vertex_type> strip;
      for (auto v : both) {
        if (first_position(result.core, v) != last_position(result.core, v)) {
          strip = v;
          break;
        }
      }
      if (!strip) {
        return result;
      }
      auto const& s = result.core[*first_position(result.core, *strip)];
      auto        h = generator(p, s.vertex, s.exponent);
      result.core   = conjugate(p, result.core, h);
      result.conjugator = multiply(p, result.conjugator, h);
    }
  }

  std::optional<Exponent> order(Presentation const& p, NormalForm const& x) {
    auto     core   = cyclically_reduce(p, x).core;
    auto     supp   = support(core);
    Exponent result = 1;
    for (auto const& s : core.syllables()) {
      auto const& o = p.order(s.vertex);
      if (!o.is_finite()
          || !(supp - VertexSet{s.vertex}).is_subset_of(
              p.graph().neighbours(s.vertex))) {
        return std::nullopt;
      }
      Exponent k = o.order() / boost::multiprecision::gcd(s.exponent, o.order());
      result     = boost::multiprecision::lcm(result, k);
    }
    return result;
  }

}  // namespace gpc

std::size_t std::hash<gpc::NormalForm>::operator()(
    gpc::NormalForm const& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  std::hash<gpc::Exponent> eh;
  for (auto const& s : x.syllables()) {
    h ^= s.vertex + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= eh(s.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
