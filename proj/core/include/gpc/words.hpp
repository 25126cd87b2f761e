#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpc/graph.hpp"
#include "gpc/vertex_set.hpp"

namespace gpc {

  using Exponent = boost::multiprecision::cpp_int;

  // Order of a cyclic vertex group: Z, or Z/n with n >= 2. Trivial vertex
  // groups are not representable.
  class CyclicOrder {
   public:
    static CyclicOrder infinite() {
      return CyclicOrder();
    }
    static CyclicOrder finite(Exponent n);

    bool is_finite() const noexcept {
      return order_ != 0;
    }
    // Zero for the infinite cyclic group.
    Exponent const& order() const noexcept {
      return order_;
    }
    // Representative of e in this group: 0..n-1 when finite, e otherwise.
    // Zero means the identity.
    Exponent canonical(Exponent const& e) const;

    bool operator==(CyclicOrder const&) const = default;

   private:
    CyclicOrder() = default;
    Exponent order_ = 0;
  };

  // One letter of a word: a nontrivial power of a vertex generator.
  struct Syllable {
    Syllable(vertex_type v, Exponent e);

    vertex_type vertex;
    Exponent    exponent;

    bool operator==(Syllable const&) const = default;
  };

  // Arbitrary, possibly unreduced, syllable sequence.
  using Word = std::vector<Syllable>;

  class Presentation;

  // The canonical reduced representative of a group element. Only
  // reduce() and the other group operations can build one.
  class NormalForm {
   public:
    NormalForm() = default;

    std::span<Syllable const> syllables() const noexcept {
      return syllables_;
    }
    Word const& word() const noexcept {
      return syllables_;
    }
    std::size_t size() const noexcept {
      return syllables_.size();
    }
    bool empty() const noexcept {
      return syllables_.empty();
    }
    Syllable const& operator[](std::size_t i) const {
      return syllables_[i];
    }

    bool operator==(NormalForm const&) const = default;
    // Shortlex on (vertex, exponent); arbitrary but total.
    bool operator<(NormalForm const& other) const;

   private:
    friend NormalForm reduce(Presentation const&, Word const&);
    explicit NormalForm(Word w) : syllables_(std::move(w)) {}
    Word syllables_;
  };

  class Presentation {
   public:
    Presentation() = default;

    // Labels must be unique and nonempty; throws std::invalid_argument.
    vertex_type add_vertex(std::string label, CyclicOrder order);
    void        add_edge(vertex_type u, vertex_type v);

    std::size_t size() const noexcept {
      return orders_.size();
    }
    VertexSet vertices() const noexcept {
      return VertexSet::range(size());
    }
    SimplicialGraph const& graph() const noexcept {
      return graph_;
    }
    CyclicOrder const& order(vertex_type v) const {
      check_vertex(v, size());
      return orders_[v];
    }
    std::string const& label(vertex_type v) const {
      check_vertex(v, size());
      return labels_[v];
    }
    std::optional<vertex_type> find(std::string_view label) const;
    bool adjacent(vertex_type u, vertex_type v) const {
      return graph_.adjacent(u, v);
    }
    bool torsion_free_on(VertexSet A) const;

    bool operator==(Presentation const&) const = default;

   private:
    SimplicialGraph          graph_;
    std::vector<CyclicOrder> orders_;
    std::vector<std::string> labels_;
  };

  // The full subgroup G_A as a presentation in its own right, with the id
  // remapping between the two.
  struct SubPresentation {
    Presentation                            presentation;
    std::vector<vertex_type>                to_parent;
    std::vector<std::optional<vertex_type>> from_parent;
  };

  SubPresentation full_subpresentation(Presentation const& p, VertexSet A);

  // Normal form of `w`: T1/T2 cancellation across commuting gaps, then the
  // shuffle class representative whose vertex sequence is lexicographically
  // least. Throws std::out_of_range on unknown vertices.
  NormalForm reduce(Presentation const& p, Word const& w);

  NormalForm generator(Presentation const& p, vertex_type v, Exponent e = 1);

  // Throws std::invalid_argument if the operands do not belong to `p`.
  NormalForm multiply(Presentation const& p,
                      NormalForm const&   x,
                      NormalForm const&   y);
  NormalForm invert(Presentation const& p, NormalForm const& x);
  NormalForm power(Presentation const& p, NormalForm const& x, Exponent k);
  NormalForm conjugate(Presentation const& p,
                       NormalForm const&   x,
                       NormalForm const&   by);  // by^-1 * x * by
  bool       commute(Presentation const& p,
                     NormalForm const&   x,
                     NormalForm const&   y);

  // Inverse of a word, syllable by syllable.
  Word inverse_word(Word const& w);

  // True if `x` is a valid normal form over `p`.
  bool belongs_to(Presentation const& p, NormalForm const& x);

  inline std::size_t length(NormalForm const& x) noexcept {
    return x.size();
  }
  VertexSet support(NormalForm const& x);
  VertexSet support(std::span<NormalForm const> X);
  std::size_t total_length(std::span<NormalForm const> X);

  // Vertices whose first occurrence can be shuffled to the front (fv) or
  // whose last occurrence can be shuffled to the back (lv).
  VertexSet first_vertices(Presentation const& p, NormalForm const& x);
  VertexSet last_vertices(Presentation const& p, NormalForm const& x);

  // Position of the first (resp. last) occurrence of `v` in `x`.
  std::optional<std::size_t> first_position(NormalForm const& x,
                                            vertex_type       v);
  std::optional<std::size_t> last_position(NormalForm const& x,
                                           vertex_type       v);

  struct CyclicReduction {
    NormalForm conjugator;
    NormalForm core;
  };

  // x = conjugator * core * conjugator^-1. Repeatedly conjugates by the
  // smallest vertex whose first and last occurrences are distinct and can be
  // brought to the front and the back respectively.
  CyclicReduction cyclically_reduce(Presentation const& p, NormalForm const& x);

  // Order of `x`; std::nullopt when infinite.
  std::optional<Exponent> order(Presentation const& p, NormalForm const& x);

}  // namespace gpc

template <>
struct std::hash<gpc::NormalForm> {
  std::size_t operator()(gpc::NormalForm const& x) const noexcept;
};
