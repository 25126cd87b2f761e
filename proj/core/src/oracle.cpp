#include "gpc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gpc {

  std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
      throw std::invalid_argument("Rng::below: empty range");
    }
    std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max()
                                - std::numeric_limits<std::uint64_t>::max() % n;
    while (true) {
      std::uint64_t r = next();
      if (r < limit) {
        return r % n;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Balls
  ////////////////////////////////////////////////////////////////////////

  Ball enumerate_ball(Presentation const& p, std::size_t radius, Exponent e_max) {
    if (e_max < 1) {
      throw std::invalid_argument("enumerate_ball: e_max must be positive");
    }
    std::vector<NormalForm> letters;
    for (vertex_type v = 0; v < p.size(); ++v) {
      auto const& o = p.order(v);
      if (o.is_finite()) {
        for (Exponent e = 1; e < o.order(); ++e) {
          letters.push_back(generator(p, v, e));
        }
      } else {
        for (Exponent e = 1; e <= e_max; ++e) {
          letters.push_back(generator(p, v, e));
          letters.push_back(generator(p, v, -e));
        }
      }
    }

    Ball ball;
    ball.presentation = p;
    ball.radius       = radius;
    ball.e_max        = e_max;
    ball.index.insert(NormalForm());
    ball.elements.push_back(NormalForm());
    std::vector<NormalForm> frontier{NormalForm()};
    for (std::size_t len = 1; len <= radius && !frontier.empty(); ++len) {
      std::vector<NormalForm> next;
      for (auto const& x : frontier) {
        for (auto const& s : letters) {
          auto y = multiply(p, x, s);
          if (y.size() != len || ball.index.contains(y)) {
            continue;
          }
          // Exponents of merged syllables may leave the bound.
          bool within = true;
          for (auto const& syl : y.syllables()) {
            if (!p.order(syl.vertex).is_finite() && abs(syl.exponent) > e_max) {
              within = false;
              break;
            }
          }
          if (!within) {
            continue;
          }
          ball.index.insert(y);
          next.push_back(std::move(y));
          if (ball.index.size() > ball_size_limit) {
            throw std::length_error("enumerate_ball: more than "
                                    + std::to_string(ball_size_limit)
                                    + " elements");
          }
        }
      }
      std::sort(next.begin(), next.end());
      ball.elements.insert(ball.elements.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return ball;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form oracle
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string key_of(Word const& w) {
      std::string k;
      for (auto const& s : w) {
        k += std::to_string(s.vertex);
        k += ':';
        k += s.exponent.str();
        k += ';';
      }
      return k;
    }

    bool lex_less(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].vertex != b[i].vertex) {
          return a[i].vertex < b[i].vertex;
        }
        if (a[i].exponent != b[i].exponent) {
          return a[i].exponent < b[i].exponent;
        }
      }
      return false;
    }
  }  // namespace

  Word oracle_normal_form(Presentation const& p, Word const& w) {
    Word start;
    for (auto const& s : w) {
      check_vertex(s.vertex, p.size());
      auto const& o = p.order(s.vertex);
      Exponent    e = s.exponent;
      if (o.is_finite()) {
        e %= o.order();
        if (e < 0) {
          e += o.order();
        }
      }
      if (e != 0) {
        start.emplace_back(s.vertex, e);
      }
    }

    std::unordered_set<std::string> seen{key_of(start)};
    std::deque<Word>                queue{start};
    Word                            best = start;
    while (!queue.empty()) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      if (lex_less(cur, best)) {
        best = cur;
      }
      auto visit = [&](Word next) {
        if (seen.insert(key_of(next)).second) {
          queue.push_back(std::move(next));
        }
      };
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        auto const u = cur[i].vertex;
        auto const v = cur[i + 1].vertex;
        if (u == v) {
          auto const& o = p.order(u);
          Exponent    e = cur[i].exponent + cur[i + 1].exponent;
          if (o.is_finite()) {
            e %= o.order();
          }
          Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
          if (e != 0) {
            next.emplace_back(u, e);
          }
          next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i + 2),
                      cur.end());
          visit(std::move(next));
        } else if (p.adjacent(u, v)) {
          Word next = cur;
          std::swap(next[i], next[i + 1]);
          visit(std::move(next));
        }
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bass-Serre tree oracle
  ////////////////////////////////////////////////////////////////////////

  std::size_t tree_distance_oracle(Presentation const& p,
                                   Splitting const&    s,
                                   Side                from,
                                   NormalForm const&   k,
                                   Side                to) {
    std::size_t const n = k.size();
    if (n >= 64) {
      throw std::length_error("tree_distance_oracle: word too long");
    }
    std::vector<std::uint64_t> pred(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!p.adjacent(k[i].vertex, k[j].vertex)) {
          pred[j] |= std::uint64_t{1} << i;
        }
      }
    }
    std::uint64_t const full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    auto side_set = [&](int side) { return side == 0 ? s.A : s.B; };

    // 0-1 search: reading a syllable of the current factor is free,
    // starting a new factor costs one edge.
    std::unordered_map<std::uint64_t, std::size_t> dist[2];
    std::deque<std::pair<std::uint64_t, int>>      queue;
    int const start = from == Side::A ? 0 : 1;
    dist[start][0]  = 0;
    queue.emplace_back(0, start);
    while (!queue.empty()) {
      auto [mask, side] = queue.front();
      queue.pop_front();
      std::size_t const d = dist[side][mask];
      auto relax = [&](std::uint64_t m, int sd, std::size_t nd, bool front) {
        auto it = dist[sd].find(m);
        if (it != dist[sd].end() && it->second <= nd) {
          return;
        }
        dist[sd][m] = nd;
        if (front) {
          queue.emplace_front(m, sd);
        } else {
          queue.emplace_back(m, sd);
        }
      };
      relax(mask, 1 - side, d + 1, false);
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t const bit = std::uint64_t{1} << j;
        if ((mask & bit) == 0 && (pred[j] & ~mask) == 0
            && side_set(side).contains(k[j].vertex)) {
          relax(mask | bit, side, d, true);
        }
      }
    }
    int const   end = to == Side::A ? 0 : 1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (int side : {0, 1}) {
      if (auto it = dist[side].find(full); it != dist[side].end()) {
        best = std::min(best, it->second + (side == end ? 0 : 1));
      }
    }
    return best;
  }

  std::size_t tree_displacement_oracle(Presentation const& p,
                                       Splitting const&    s,
                                       NormalForm const&   x) {
    if (s.degenerate) {
      throw std::invalid_argument("tree oracle: degenerate splitting");
    }
    std::vector<NormalForm> prefixes;
    for (auto const& y : {x, invert(p, x)}) {
      std::size_t const          n = y.size();
      std::vector<std::uint64_t> pred(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (!p.adjacent(y[i].vertex, y[j].vertex)) {
            pred[j] |= std::uint64_t{1} << i;
          }
        }
      }
      std::unordered_set<std::uint64_t> seen{0};
      std::vector<std::uint64_t>        stack{0};
      while (!stack.empty()) {
        auto mask = stack.back();
        stack.pop_back();
        Word w;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1) {
            w.push_back(y[i]);
          }
        }
        prefixes.push_back(reduce(p, w));
        for (std::size_t j = 0; j < n; ++j) {
          std::uint64_t const bit = std::uint64_t{1} << j;
          if ((mask & bit) == 0 && (pred[j] & ~mask) == 0
              && seen.insert(mask | bit).second) {
            stack.push_back(mask | bit);
          }
        }
      }
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto const& g : prefixes) {
      auto k = conjugate(p, x, g);
      for (Side side : {Side::A, Side::B}) {
        best = std::min(best, tree_distance_oracle(p, s, side, k, side));
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random instances and fixtures
  ////////////////////////////////////////////////////////////////////////

  Presentation random_presentation(Rng& rng, GeneratorOptions const& options) {
    auto const   n = static_cast<std::size_t>(
        rng.uniform(static_cast<long>(options.min_vertices),
                    static_cast<long>(options.max_vertices)));
    Presentation p;
    for (std::size_t v = 0; v < n; ++v) {
      CyclicOrder o = CyclicOrder::infinite();
      if (options.racg) {
        o = CyclicOrder::finite(2);
      } else if (!options.raag) {
        switch (rng.below(3)) {
          case 0:
            o = CyclicOrder::finite(2);
            break;
          case 1:
            o = CyclicOrder::finite(3);
            break;
          default:
            break;
        }
      }
      p.add_vertex(std::string(1, static_cast<char>('a' + v)), o);
    }
    for (vertex_type u = 0; u < n; ++u) {
      for (vertex_type v = u + 1; v < n; ++v) {
        if (rng.coin()) {
          p.add_edge(u, v);
        }
      }
    }
    return p;
  }

  Word random_word(Rng& rng, Presentation const& p, std::size_t max_length,
                   long e_max) {
    Word w;
    if (p.size() == 0) {
      return w;
    }
    auto const len = rng.below(max_length + 1);
    for (std::size_t i = 0; i < len; ++i) {
      auto const  v = static_cast<vertex_type>(rng.below(p.size()));
      auto const& o = p.order(v);
      Exponent    e;
      if (o.is_finite()) {
        e = Exponent(1) + rng.below(o.order().convert_to<std::uint64_t>() - 1);
      } else {
        e = rng.uniform(1, e_max);
        if (rng.coin()) {
          e = -e;
        }
      }
      w.emplace_back(v, e);
    }
    return w;
  }

  VertexSet random_subset(Rng& rng, VertexSet from) {
    VertexSet result;
    for (auto v : from) {
      if (rng.coin()) {
        result.insert(v);
      }
    }
    return result;
  }

  Presentation fixture_ex1() {
    Presentation p;
    p.add_vertex("v1", CyclicOrder::finite(3));
    p.add_vertex("v2", CyclicOrder::infinite());
    p.add_vertex("v3", CyclicOrder::infinite());
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    return p;
  }

  Presentation fixture_ex2gen() {
    Presentation p;
    p.add_vertex("a", CyclicOrder::finite(3));
    p.add_vertex("b", CyclicOrder::finite(3));
    p.add_vertex("c", CyclicOrder::infinite());
    p.add_edge(0, 2);
    p.add_edge(1, 2);
    return p;
  }

  Presentation fixture_racg2() {
    Presentation p;
    p.add_vertex("u", CyclicOrder::finite(2));
    p.add_vertex("w", CyclicOrder::finite(2));
    return p;
  }

  Presentation fixture_square() {
    Presentation p;
    for (char const* label : {"a", "b", "c", "d"}) {
      p.add_vertex(label, CyclicOrder::infinite());
    }
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    p.add_edge(2, 3);
    p.add_edge(3, 0);
    return p;
  }

}  // namespace gpc
