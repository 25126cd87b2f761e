#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>

namespace gpc {

  using vertex_type = std::uint32_t;

  // Vertex sets are machine words, so presentations are capped at this size.
  inline constexpr std::size_t max_vertices = 64;

  inline void check_vertex(vertex_type v, std::size_t n) {
    if (v >= n) {
      throw std::out_of_range("vertex id " + std::to_string(v)
                              + " out of range for " + std::to_string(n)
                              + " vertices");
    }
  }

  class VertexSet {
   public:
    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = vertex_type;
      using difference_type   = std::ptrdiff_t;
      using pointer           = vertex_type const*;
      using reference         = vertex_type;

      constexpr const_iterator() = default;
      constexpr explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

      constexpr vertex_type operator*() const {
        return static_cast<vertex_type>(std::countr_zero(rest_));
      }
      constexpr const_iterator& operator++() {
        rest_ &= rest_ - 1;
        return *this;
      }
      constexpr const_iterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
      }
      constexpr bool operator==(const_iterator const&) const = default;

     private:
      std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<vertex_type> vs) {
      for (auto v : vs) {
        insert(v);
      }
    }

    static constexpr VertexSet range(std::size_t n) {
      return VertexSet(n >= 64 ? ~std::uint64_t(0)
                               : (std::uint64_t(1) << n) - 1);
    }
    static constexpr VertexSet singleton(vertex_type v) {
      return VertexSet(std::uint64_t(1) << v);
    }

    constexpr std::uint64_t bits() const noexcept {
      return bits_;
    }
    constexpr bool contains(vertex_type v) const noexcept {
      return v < 64 && ((bits_ >> v) & 1U);
    }
    constexpr void insert(vertex_type v) {
      if (v >= 64) {
        throw std::out_of_range("vertex id exceeds vertex set capacity");
      }
      bits_ |= std::uint64_t(1) << v;
    }
    constexpr void erase(vertex_type v) noexcept {
      if (v < 64) {
        bits_ &= ~(std::uint64_t(1) << v);
      }
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool empty() const noexcept {
      return bits_ == 0;
    }
    constexpr bool is_subset_of(VertexSet other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool intersects(VertexSet other) const noexcept {
      return (bits_ & other.bits_) != 0;
    }
    // Smallest member; undefined on the empty set.
    constexpr vertex_type front() const noexcept {
      return static_cast<vertex_type>(std::countr_zero(bits_));
    }

    constexpr const_iterator begin() const noexcept {
      return const_iterator(bits_);
    }
    constexpr const_iterator end() const noexcept {
      return const_iterator(0);
    }

    constexpr VertexSet operator|(VertexSet o) const noexcept {
      return VertexSet(bits_ | o.bits_);
    }
    constexpr VertexSet operator&(VertexSet o) const noexcept {
      return VertexSet(bits_ & o.bits_);
    }
    constexpr VertexSet operator-(VertexSet o) const noexcept {
      return VertexSet(bits_ & ~o.bits_);
    }
    constexpr VertexSet& operator|=(VertexSet o) noexcept {
      bits_ |= o.bits_;
      return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) noexcept {
      bits_ &= o.bits_;
      return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) noexcept {
      bits_ &= ~o.bits_;
      return *this;
    }

    constexpr bool operator==(VertexSet const&) const = default;

    // Orders by cardinality first, then lexicographically on the sorted
    // member lists. This is the enumeration order used for subset searches.
    constexpr bool shortlex_less(VertexSet o) const noexcept {
      if (size() != o.size()) {
        return size() < o.size();
      }
      auto it = begin();
      auto jt = o.begin();
      for (; it != end(); ++it, ++jt) {
        if (*it != *jt) {
          return *it < *jt;
        }
      }
      return false;
    }

   private:
    std::uint64_t bits_ = 0;
  };

}  // namespace gpc

template <>
struct std::hash<gpc::VertexSet> {
  std::size_t operator()(gpc::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
