#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "gpc/bassserre.hpp"
#include "gpc/words.hpp"

namespace gpc {

  // Deterministic across platforms: draws are derived from mt19937_64 by
  // rejection, never through the standard distributions.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() {
      return engine_();
    }
    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    long uniform(long lo, long hi) {
      return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
    bool coin() {
      return (next() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
  };

  inline constexpr std::size_t ball_size_limit = 1'000'000;

  // Every element of length at most `radius` whose infinite-order syllables
  // have |exponent| <= e_max, in shortlex order.
  struct Ball {
    Presentation                   presentation;
    std::size_t                    radius = 0;
    Exponent                       e_max;
    std::vector<NormalForm>        elements;
    std::unordered_set<NormalForm> index;

    bool contains(NormalForm const& x) const {
      return index.contains(x);
    }
    std::size_t size() const {
      return elements.size();
    }
  };

  // Throws std::length_error beyond ball_size_limit elements.
  Ball enumerate_ball(Presentation const& p, std::size_t radius, Exponent e_max = 2);

  // Independent of reduce(): explores every word reachable from `w` by
  // deleting trivial syllables, merging adjacent syllables of one vertex and
  // swapping adjacent commuting syllables, then returns the shortest such
  // word with the lexicographically least (vertex, exponent) sequence.
  // Exponents of finite vertex groups are written in 0..n-1.
  Word oracle_normal_form(Presentation const& p, Word const& w);

  // Tree displacement of x on the Bass-Serre tree of s, minimised over the
  // vertices gG_A and gG_B with g a prefix of x or of x^-1. Distances come
  // from a search over all prefixes of the connecting element, independent
  // of alternating_form().
  std::size_t tree_displacement_oracle(Presentation const& p,
                                       Splitting const&    s,
                                       NormalForm const&   x);

  // Distance in the Bass-Serre tree from G_from to k G_to.
  std::size_t tree_distance_oracle(Presentation const& p,
                                   Splitting const&    s,
                                   Side                from,
                                   NormalForm const&   k,
                                   Side                to);

  struct GeneratorOptions {
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 4;
    bool        raag         = false;  // all vertex groups infinite
    bool        racg         = false;  // all vertex groups of order 2
  };

  // Orders drawn from {2, 3, infinite}; each edge present with probability
  // one half.
  Presentation random_presentation(Rng& rng, GeneratorOptions const& options);
  // Length uniform in [0, max_length].
  Word random_word(Rng& rng, Presentation const& p, std::size_t max_length,
                   long e_max = 2);
  VertexSet random_subset(Rng& rng, VertexSet from);

  // Fixtures: the path v1 - v2 - v3 with G_v1 = Z/3; the path a - c - b with
  // a, b of order 3; two non-adjacent involutions u, w; the 4-cycle RAAG.
  Presentation fixture_ex1();
  Presentation fixture_ex2gen();
  Presentation fixture_racg2();
  Presentation fixture_square();

  struct SuiteReport {
    std::string              name;
    std::uint64_t            seed     = 0;
    std::size_t              trials   = 0;
    std::size_t              failures = 0;
    std::optional<std::string> counterexample;
    std::vector<std::string> notes;

    bool passed() const {
      return failures == 0;
    }
  };

  std::vector<std::string> suite_names();
  std::size_t              default_trials(std::string const& name);
  // Throws std::invalid_argument for an unregistered suite.
  SuiteReport check_suite(std::string const& name,
                          std::uint64_t      seed,
                          std::size_t        trials);
  std::string to_string(SuiteReport const& r);

}  // namespace gpc
