#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpc/classify.hpp"
#include "gpc/frontend.hpp"
#include "gpc/kernel.hpp"
#include "gpc/oracle.hpp"
#include "gpc/parabolic.hpp"

namespace gpc {

  namespace {

    struct Instance {
      Presentation           p;
      std::vector<Word>      words;
      std::vector<VertexSet> sets;
      std::vector<long>      ints;
    };

    // Counters and maxima collected across trials, printed as notes.
    class Stats {
     public:
      void count(std::string const& key, long n = 1) {
        values_[key] += n;
      }
      void max(std::string const& key, long v) {
        auto [it, fresh] = values_.try_emplace(key, v);
        if (!fresh) {
          it->second = std::max(it->second, v);
        }
      }
      std::map<std::string, long> const& values() const {
        return values_;
      }

     private:
      std::map<std::string, long> values_;
    };

    using Outcome  = std::optional<std::string>;
    using Property = std::function<Outcome(Instance const&, Stats&)>;

    struct Suite {
      std::string                           name;
      std::size_t                           trials;
      std::function<Instance(Rng&)>         generate;
      Property                              property;
      std::function<Outcome(Stats&)>        fixed;
    };

    std::string describe(Presentation const& p) {
      std::string out;
      for (vertex_type v = 0; v < p.size(); ++v) {
        if (!out.empty()) {
          out += ',';
        }
        out += p.label(v) + ":";
        auto const& o = p.order(v);
        out += o.is_finite() ? "Z/" + o.order().str() : std::string("Z");
      }
      out += ';';
      bool first = true;
      for (auto [u, v] : p.graph().edges()) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += p.label(u) + "-" + p.label(v);
      }
      return out;
    }

    std::string describe(Instance const& inst) {
      std::string out = "spec{" + describe(inst.p) + "}";
      out += " words[";
      for (std::size_t i = 0; i < inst.words.size(); ++i) {
        out += (i ? " | " : "") + format(inst.p, inst.words[i]);
      }
      out += "]";
      if (!inst.sets.empty()) {
        out += " sets[";
        for (std::size_t i = 0; i < inst.sets.size(); ++i) {
          out += (i ? " " : "") + format(inst.p, inst.sets[i]);
        }
        out += "]";
      }
      if (!inst.ints.empty()) {
        out += " ints[";
        for (std::size_t i = 0; i < inst.ints.size(); ++i) {
          out += (i ? " " : "") + std::to_string(inst.ints[i]);
        }
        out += "]";
      }
      return out;
    }

    Outcome guarded(Property const& prop, Instance const& inst, Stats& stats) {
      try {
        return prop(inst, stats);
      } catch (std::exception const& e) {
        return std::string("exception: ") + e.what();
      }
    }

    // Deletes syllables while the failure persists.
    std::pair<Instance, std::string> shrink(Property const& prop,
                                            Instance         inst,
                                            std::string      reason) {
      for (int round = 0; round < 200; ++round) {
        bool progressed = false;
        for (std::size_t i = 0; i < inst.words.size() && !progressed; ++i) {
          for (std::size_t j = 0; j < inst.words[i].size() && !progressed; ++j) {
            Instance candidate = inst;
            candidate.words[i].erase(candidate.words[i].begin()
                                     + static_cast<std::ptrdiff_t>(j));
            Stats scratch;
            if (auto r = guarded(prop, candidate, scratch)) {
              inst       = std::move(candidate);
              reason     = *r;
              progressed = true;
            }
          }
        }
        if (!progressed) {
          break;
        }
      }
      return {std::move(inst), std::move(reason)};
    }

    std::vector<NormalForm> reduce_all(Presentation const& p,
                                       std::vector<Word> const& ws,
                                       std::size_t from = 0) {
      std::vector<NormalForm> out;
      for (std::size_t i = from; i < ws.size(); ++i) {
        out.push_back(reduce(p, ws[i]));
      }
      return out;
    }

    // Calls f(word, value) on every nonempty reduced word of length at most
    // max_length over the given generators and their inverses.
    void for_each_free_word(
        Presentation const&                                   p,
        std::vector<NormalForm> const&                        gens,
        std::size_t                                           max_length,
        std::function<bool(FreeWord const&, NormalForm const&)> const& f) {
      std::vector<NormalForm> letters;
      std::vector<int>        names;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        letters.push_back(gens[i]);
        names.push_back(static_cast<int>(i) + 1);
        letters.push_back(invert(p, gens[i]));
        names.push_back(-static_cast<int>(i) - 1);
      }
      FreeWord word;
      std::function<bool(NormalForm const&)> rec = [&](NormalForm const& acc) {
        if (word.size() == max_length) {
          return true;
        }
        for (std::size_t i = 0; i < letters.size(); ++i) {
          if (!word.empty() && word.back() == -names[i]) {
            continue;
          }
          word.push_back(names[i]);
          auto next = multiply(p, acc, letters[i]);
          if (!f(word, next) || !rec(next)) {
            word.pop_back();
            return false;
          }
          word.pop_back();
        }
        return true;
      };
      rec(NormalForm());
    }

    std::string word_text(FreeWord const& w) {
      return to_string(w);
    }

    Word kernel_word(Rng& rng, Presentation const& p, vertex_type a,
                     std::size_t max_length) {
      Word w   = random_word(rng, p, max_length, 1);
      auto sum = vertex_projection(p, reduce(p, w), a);
      if (sum != 0) {
        w.emplace_back(a, -sum);
      }
      return w;
    }

    Presentation presentation_with_nonedge(Rng& rng, GeneratorOptions opt) {
      while (true) {
        auto p = random_presentation(rng, opt);
        if (p.graph().number_of_edges() < p.size() * (p.size() - 1) / 2) {
          return p;
        }
      }
    }

    bool is_irreducible_on(Presentation const& p, VertexSet S) {
      return is_irreducible(full_subgraph(p.graph(), S).graph);
    }

    // Rank of the integer vectors, by fraction-free elimination.
    std::size_t integer_rank(std::vector<std::vector<Exponent>> rows) {
      std::size_t rank = 0;
      if (rows.empty()) {
        return 0;
      }
      std::size_t const cols = rows.front().size();
      for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
          ++pivot;
        }
        if (pivot == rows.size()) {
          continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
          if (rows[r][c] == 0) {
            continue;
          }
          Exponent const f = rows[r][c], g = rows[rank][c];
          for (std::size_t j = 0; j < cols; ++j) {
            rows[r][j] = rows[r][j] * g - rows[rank][j] * f;
          }
        }
        ++rank;
      }
      return rank;
    }

    ////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////

    Suite nf_minimality() {
      Suite s;
      s.name     = "nf_minimality";
      s.trials   = 10000;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p = random_presentation(rng, {1, 4});
        inst.words.push_back(random_word(rng, inst.p, 6));
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const nf     = reduce(inst.p, inst.words[0]);
        auto const oracle = oracle_normal_form(inst.p, inst.words[0]);
        if (nf.word() != oracle) {
          return "reduce gives " + format(inst.p, nf) + ", oracle gives "
                 + format(inst.p, oracle);
        }
        if (nf.size() < inst.words[0].size()) {
          stats.count("shortened");
        }
        stats.max("max_input_length", static_cast<long>(inst.words[0].size()));
        return std::nullopt;
      };
      return s;
    }

    Suite nf_congruence() {
      Suite s;
      s.name     = "nf_congruence";
      s.trials   = 2000;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p  = random_presentation(rng, {1, 4});
        Word w1 = random_word(rng, inst.p, 5);
        Word w2;
        if (rng.coin() || w1.empty()) {
          w2 = random_word(rng, inst.p, 5);
        } else {
          // A word for the same element, by random inverse moves.
          w2         = w1;
          auto moves = rng.uniform(1, 3);
          for (long m = 0; m < moves && w2.size() < 8; ++m) {
            auto const pos = rng.below(w2.size() + 1);
            switch (rng.below(3)) {
              case 0: {
                auto v = static_cast<vertex_type>(rng.below(inst.p.size()));
                w2.insert(w2.begin() + static_cast<std::ptrdiff_t>(pos),
                          {Syllable(v, 1), Syllable(v, -1)});
                break;
              }
              case 1: {
                if (pos == w2.size()) {
                  break;
                }
                auto s  = w2[pos];
                auto e1 = Exponent(rng.uniform(1, 2)) * (rng.coin() ? 1 : -1);
                if (e1 == s.exponent) {
                  break;
                }
                w2[pos] = Syllable(s.vertex, e1);
                w2.insert(w2.begin() + static_cast<std::ptrdiff_t>(pos + 1),
                          Syllable(s.vertex, s.exponent - e1));
                break;
              }
              default:
                if (pos + 1 < w2.size()
                    && inst.p.adjacent(w2[pos].vertex, w2[pos + 1].vertex)) {
                  std::swap(w2[pos], w2[pos + 1]);
                }
            }
          }
        }
        inst.words = {w1, w2};
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p  = inst.p;
        auto const  x  = reduce(p, inst.words[0]);
        auto const  y  = reduce(p, inst.words[1]);
        bool const  eq = x == y;
        bool const  oracle_eq = oracle_normal_form(p, inst.words[0])
                               == oracle_normal_form(p, inst.words[1]);
        if (eq != oracle_eq) {
          return std::string("reduce says ") + (eq ? "equal" : "different")
                 + ", oracle disagrees";
        }
        Word joined = inst.words[0];
        joined.insert(joined.end(), inst.words[1].begin(), inst.words[1].end());
        if (reduce(p, joined) != multiply(p, x, y)) {
          return std::string("multiply disagrees with reduce of the product");
        }
        if (reduce(p, inverse_word(inst.words[0])) != invert(p, x)) {
          return std::string("invert disagrees with the inverse word");
        }
        if (!multiply(p, x, invert(p, x)).empty()) {
          return std::string("x * x^-1 is not trivial");
        }
        if (eq) {
          stats.count("equal_pairs");
        }
        return std::nullopt;
      };
      return s;
    }

    Outcome parabolic_ball_check(Instance const& inst, Stats& stats,
                                 std::size_t radius, long e_max) {
      auto const& p  = inst.p;
      auto const  P1 = canonicalize(p, reduce(p, inst.words[0]), inst.sets[0]);
      auto const  P2 = canonicalize(p, reduce(p, inst.words[1]), inst.sets[1]);
      auto const  I  = intersect(p, P1, P2);
      if (intersect(p, P2, P1) != I) {
        return "intersection is not symmetric: " + format(p, I) + " vs "
               + format(p, intersect(p, P2, P1));
      }
      if (!parabolic_contains(p, P1, I) || !parabolic_contains(p, P2, I)) {
        return "intersection " + format(p, I) + " not contained in both";
      }
      auto const ball = enumerate_ball(p, radius, e_max);
      for (auto const& x : ball.elements) {
        bool const both = element_in_parabolic(p, x, P1)
                          && element_in_parabolic(p, x, P2);
        if (both != element_in_parabolic(p, x, I)) {
          return "element " + format(p, x) + (both ? " lies" : " does not lie")
                 + " in both but intersection " + format(p, I) + " disagrees";
        }
        if (both && !x.empty()) {
          stats.count("nontrivial_common_elements");
        }
      }
      stats.count("ball_elements", static_cast<long>(ball.size()));
      if (!I.is_trivial()) {
        stats.count("nontrivial_intersections");
      }
      return std::nullopt;
    }

    Suite prop_3_4() {
      Suite s;
      s.name     = "prop_3_4";
      s.trials   = 1000;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p     = random_presentation(rng, {1, 4});
        inst.words = {random_word(rng, inst.p, 3), random_word(rng, inst.p, 3)};
        inst.sets  = {random_subset(rng, inst.p.vertices()),
                      random_subset(rng, inst.p.vertices())};
        inst.ints  = {rng.below(25) == 0 ? 1L : 0L};
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        if (auto r = parabolic_ball_check(inst, stats, 4, 1)) {
          return r;
        }
        if (inst.ints[0] == 1) {
          stats.count("e_max_doubling_checks");
          Stats scratch;
          if (auto r = parabolic_ball_check(inst, scratch, 3, 2)) {
            return "with doubled e_max: " + *r;
          }
        }
        return std::nullopt;
      };
      return s;
    }

    Outcome normalizer_ball_check(Instance const& inst, Stats& stats,
                                  std::size_t radius, long e_max) {
      auto const& p = inst.p;
      auto const  f = reduce(p, inst.words[0]);
      auto const  P = canonicalize(p, f, inst.sets[0]);
      auto const  N = normalizer(p, P);
      std::vector<NormalForm> gens;
      for (auto t : inst.sets[0]) {
        gens.push_back(conjugate(p, generator(p, t), invert(p, f)));
      }
      auto const ball = enumerate_ball(p, radius, e_max);
      for (auto const& x : ball.elements) {
        auto const xi     = invert(p, x);
        bool       direct = true;
        for (auto const& t : gens) {
          if (!element_in_parabolic(p, conjugate(p, t, xi), P)
              || !element_in_parabolic(p, conjugate(p, t, x), P)) {
            direct = false;
            break;
          }
        }
        if (direct != element_in_parabolic(p, x, N)) {
          return "element " + format(p, x) + (direct ? " normalizes " : " does not normalize ")
                 + format(p, P) + " but the formula gives " + format(p, N);
        }
        if (direct) {
          stats.count("normalizing_elements");
        }
      }
      stats.count("ball_elements", static_cast<long>(ball.size()));
      return std::nullopt;
    }

    Suite prop_3_13() {
      Suite s;
      s.name     = "prop_3_13";
      s.trials   = 1000;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p = random_presentation(rng, {1, 4});
        auto S = random_subset(rng, inst.p.vertices());
        if (S.empty()) {
          S.insert(static_cast<vertex_type>(rng.below(inst.p.size())));
        }
        inst.words = {random_word(rng, inst.p, 3)};
        inst.sets  = {S};
        inst.ints  = {rng.below(25) == 0 ? 1L : 0L};
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        if (auto r = normalizer_ball_check(inst, stats, 4, 1)) {
          return r;
        }
        if (inst.ints[0] == 1) {
          stats.count("e_max_doubling_checks");
          Stats scratch;
          if (auto r = normalizer_ball_check(inst, scratch, 3, 2)) {
            return "with doubled e_max: " + *r;
          }
        }
        return std::nullopt;
      };
      return s;
    }

    struct KernelFixture {
      std::string  name;
      Presentation p;
      vertex_type  a;
    };

    std::vector<KernelFixture> kernel_fixtures() {
      return {{"ex1", fixture_ex1(), 0},
              {"racg2", fixture_racg2(), 0},
              {"square", fixture_square(), 0}};
    }

    // psi/phi round trips and length bounds on one kernel element.
    Outcome kernel_element_check(KernelPresentation& k, NormalForm const& w,
                                 Stats& stats) {
      auto const& p = k.base();
      auto const  y = psi(k, w);
      if (phi(k, y) != w) {
        return "phi(psi(" + format(p, w) + ")) = " + format(p, phi(k, y));
      }
      bool const through_a = support(w).contains(k.a());
      if (y.size() > w.size()
          || (through_a && y.size() + 2 > w.size())
          || (!through_a && y.size() != w.size())) {
        stats.count("length_bound_violations");
        return "length bound fails for " + format(p, w) + ": |psi| = "
               + std::to_string(y.size());
      }
      stats.count("kernel_elements");
      return std::nullopt;
    }

    Outcome delta_census_ex1(Stats& stats) {
      auto const p = fixture_ex1();
      auto       k = kernel_presentation(p, 0);
      auto const d = k.delta_presentation();
      stats.max("ex1_delta_vertices", static_cast<long>(d.size()));
      stats.max("ex1_delta_edges", static_cast<long>(d.graph().number_of_edges()));
      if (d.size() != 4 || d.graph().number_of_edges() != 3) {
        return "ex1 census is " + std::to_string(d.size()) + " vertices / "
               + std::to_string(d.graph().number_of_edges()) + " edges";
      }
      auto hub = k.find(DeltaVertex::shared_vertex(1));
      if (!hub || d.graph().neighbours(*hub).size() != 3) {
        return std::string("ex1: the shared vertex is not adjacent to all three "
                           "coset vertices");
      }
      return std::nullopt;
    }

    Suite thm_5_1() {
      Suite s;
      s.name  = "thm_5_1";
      s.trials = 300;
      s.fixed = [](Stats& stats) -> Outcome {
        if (auto r = delta_census_ex1(stats)) {
          return r;
        }
        for (auto const& fx : kernel_fixtures()) {
          auto       k    = kernel_presentation(fx.p, fx.a);
          auto const ball = enumerate_ball(fx.p, 6, 1);
          for (auto const& w : ball.elements) {
            if (vertex_projection(fx.p, w, fx.a) != 0) {
              continue;
            }
            if (auto r = kernel_element_check(k, w, stats)) {
              return fx.name + ": " + *r;
            }
          }
          // psi(phi(y)) = y on a ball of Δ, over the coset vertices with
          // g in {-1, 0, 1} when G_a is infinite.
          VertexSet window;
          for (auto u : k.shared_vertices()) {
            window.insert(k.realize(DeltaVertex::shared_vertex(u)));
          }
          for (long g = -1; g <= 1; ++g) {
            for (auto u : k.coset_vertices()) {
              window.insert(k.realize(DeltaVertex::coset_vertex(g, u)));
            }
          }
          auto const delta = k.delta_presentation();
          auto const sub   = full_subpresentation(delta, window);
          auto const dball = enumerate_ball(sub.presentation, 6, 1);
          for (auto const& ysub : dball.elements) {
            Word w;
            for (auto const& syl : ysub.syllables()) {
              w.emplace_back(sub.to_parent[syl.vertex], syl.exponent);
            }
            auto const y = reduce(k.delta_presentation(), w);
            auto const x = phi(k, y);
            if (vertex_projection(fx.p, x, fx.a) != 0) {
              return fx.name + ": phi leaves the kernel";
            }
            if (psi(k, x) != y) {
              return fx.name + ": psi(phi(y)) differs from y = "
                     + format(k.delta_presentation(), y);
            }
            stats.count("delta_elements");
          }
        }
        return std::nullopt;
      };
      s.generate = [](Rng& rng) {
        Instance   inst;
        auto const index = rng.below(3);
        auto const fx    = kernel_fixtures()[index];
        inst.p           = fx.p;
        inst.words       = {kernel_word(rng, fx.p, fx.a, 6),
                            kernel_word(rng, fx.p, fx.a, 6)};
        inst.ints        = {static_cast<long>(fx.a)};
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const a = static_cast<vertex_type>(inst.ints[0]);
        auto       k = kernel_presentation(inst.p, a);
        auto const x = reduce(inst.p, inst.words[0]);
        auto const y = reduce(inst.p, inst.words[1]);
        if (vertex_projection(inst.p, x, a) != 0
            || vertex_projection(inst.p, y, a) != 0) {
          return std::nullopt;
        }
        auto const px  = psi(k, x);
        auto const py  = psi(k, y);
        auto const pxy = psi(k, multiply(inst.p, x, y));
        if (pxy != multiply(k.delta_presentation(), px, py)) {
          return std::string("psi is not multiplicative");
        }
        if (phi(k, multiply(k.delta_presentation(), px, py))
            != multiply(inst.p, phi(k, px), phi(k, py))) {
          return std::string("phi is not multiplicative");
        }
        stats.count("homomorphism_pairs");
        return std::nullopt;
      };
      return s;
    }

    Suite kernel_roundtrip() {
      Suite s;
      s.name   = "kernel_roundtrip";
      s.trials = 500;
      s.fixed  = [](Stats& stats) { return delta_census_ex1(stats); };
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p      = random_presentation(rng, {2, 4});
        auto const a = static_cast<vertex_type>(rng.below(inst.p.size()));
        inst.words  = {kernel_word(rng, inst.p, a, 6),
                       kernel_word(rng, inst.p, a, 6),
                       random_word(rng, inst.p, 5)};
        inst.ints   = {static_cast<long>(a)};
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p = inst.p;
        auto const  a = static_cast<vertex_type>(inst.ints[0]);
        auto        k = kernel_presentation(p, a);
        auto const  x = reduce(p, inst.words[0]);
        auto const  y = reduce(p, inst.words[1]);
        if (vertex_projection(p, x, a) != 0 || vertex_projection(p, y, a) != 0) {
          return std::nullopt;
        }
        for (auto const& w : {x, y}) {
          if (auto r = kernel_element_check(k, w, stats)) {
            return r;
          }
        }
        if (psi(k, multiply(p, x, y))
            != multiply(k.delta_presentation(), psi(k, x), psi(k, y))) {
          return std::string("psi is not multiplicative");
        }
        // A word over Δ built from the third word: syllable i goes to the
        // coset i mod 3 - 1.
        Word dw;
        for (std::size_t i = 0; i < inst.words[2].size(); ++i) {
          auto const& syl = inst.words[2][i];
          if (syl.vertex == a) {
            continue;
          }
          auto d = k.shared_vertices().contains(syl.vertex)
                       ? DeltaVertex::shared_vertex(syl.vertex)
                       : DeltaVertex::coset_vertex(
                             static_cast<long>(i % 3) - 1, syl.vertex);
          dw.emplace_back(k.realize(d), syl.exponent);
        }
        auto const dy = reduce(k.delta_presentation(), dw);
        auto const dx = phi(k, dy);
        if (vertex_projection(p, dx, a) != 0) {
          return "phi(" + format(k.delta_presentation(), dy)
                 + ") is outside the kernel";
        }
        if (psi(k, dx) != dy) {
          return "psi(phi(y)) differs from y = "
                 + format(k.delta_presentation(), dy);
        }
        stats.count("delta_roundtrips");
        return std::nullopt;
      };
      return s;
    }

    Suite prop_5_6() {
      Suite s;
      s.name     = "prop_5_6";
      s.trials   = 500;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p       = random_presentation(rng, {1, 4});
        auto const n = rng.uniform(1, 3);
        // Commutators lie in every vertex kernel.
        bool const commutators = rng.below(4) == 0;
        for (long i = 0; i < n; ++i) {
          Word w = random_word(rng, inst.p, commutators ? 2 : 4);
          if (commutators) {
            Word v  = random_word(rng, inst.p, 2);
            Word wi = inverse_word(w), vi = inverse_word(v);
            w.insert(w.end(), v.begin(), v.end());
            w.insert(w.end(), wi.begin(), wi.end());
            w.insert(w.end(), vi.begin(), vi.end());
          }
          inst.words.push_back(w);
        }
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p   = inst.p;
        auto const  X   = reduce_all(p, inst.words);
        auto const  res = compress(p, X);
        auto const& q   = res.presentation;
        auto const& Y   = res.images;
        if (res.budget_exhausted) {
          return std::string("closure budget exhausted");
        }
        if (total_length(Y) > total_length(X)) {
          return "total length grew from " + std::to_string(total_length(X))
                 + " to " + std::to_string(total_length(Y));
        }
        for (std::size_t i = 0; i < X.size(); ++i) {
          if (res.map(X[i]) != Y[i]) {
            return "map disagrees with the image of generator "
                   + std::to_string(i);
          }
        }
        // Injectivity on the radius-3 ball of ⟨X⟩.
        std::unordered_map<NormalForm, NormalForm> forward, backward;
        std::optional<std::string>                 clash;
        std::vector<NormalForm>                    yinv;
        for (auto const& y : Y) {
          yinv.push_back(invert(q, y));
        }
        for_each_free_word(p, X, 3, [&](FreeWord const& w, NormalForm const& v) {
          Word img;
          for (int letter : w) {
            auto const i = static_cast<std::size_t>(std::abs(letter)) - 1;
            auto const& g = letter > 0 ? Y[i] : yinv[i];
            img.insert(img.end(), g.word().begin(), g.word().end());
          }
          auto const image = reduce(q, img);
          auto [f, fresh_f] = forward.try_emplace(v, image);
          auto [b, fresh_b] = backward.try_emplace(image, v);
          if (f->second != image || b->second != v) {
            clash = "not injective at " + word_text(w);
            return false;
          }
          return true;
        });
        if (clash) {
          return clash;
        }
        if (essential_support(q, Y) != q.vertices()) {
          return std::string("essential support of the images is not all of V");
        }
        for (auto t : q.vertices()) {
          bool nontrivial = false;
          for (auto const& y : Y) {
            nontrivial = nontrivial || vertex_projection(q, y, t) != 0;
          }
          if (!nontrivial) {
            return "projection to vertex " + q.label(t) + " is trivial";
          }
        }
        auto const supp = support(X);
        for (auto t : q.vertices()) {
          bool found = false;
          for (auto v : supp) {
            found = found || p.order(v) == q.order(t);
          }
          if (!found) {
            return "vertex group of " + q.label(t) + " is not one of the input's";
          }
        }
        auto const E = essential_support(p, X);
        if (E.size() >= 2 && is_irreducible_on(p, E)) {
          stats.count("irreducible_inputs");
          for (auto const& stage : res.log) {
            auto const Es = essential_support(stage.presentation, stage.images);
            if (Es.size() < 2 || !is_irreducible_on(stage.presentation, Es)) {
              return std::string("an intermediate essential support is "
                                 "reducible or too small");
            }
          }
        }
        long kernels = 0;
        for (auto const& stage : res.log) {
          kernels += stage.kind == CompressStage::Kind::kernel ? 1 : 0;
        }
        stats.count("kernel_stages", kernels);
        stats.max("max_kernel_stages", kernels);
        return std::nullopt;
      };
      return s;
    }

    std::optional<FreeWord> brute_relation(Presentation const& p,
                                           NormalForm const&   x,
                                           NormalForm const&   y,
                                           std::size_t         max_length) {
      std::optional<FreeWord> found;
      for_each_free_word(p, {x, y}, max_length,
                         [&](FreeWord const& w, NormalForm const& v) {
                           if (v.empty()) {
                             found = w;
                             return false;
                           }
                           return true;
                         });
      return found;
    }

    Suite baudisch() {
      Suite s;
      s.name     = "baudisch";
      s.trials   = 1000;
      s.generate = [](Rng& rng) {
        while (true) {
          Instance inst;
          inst.p = presentation_with_nonedge(rng, {2, 4, true});
          for (int attempt = 0; attempt < 50; ++attempt) {
            Word x = random_word(rng, inst.p, 4);
            Word y = random_word(rng, inst.p, 4);
            if (!commute(inst.p, reduce(inst.p, x), reduce(inst.p, y))) {
              inst.words = {x, y};
              return inst;
            }
          }
        }
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p = inst.p;
        auto const  x = reduce(p, inst.words[0]);
        auto const  y = reduce(p, inst.words[1]);
        if (commute(p, x, y)) {
          stats.count("skipped_commuting");
          return std::nullopt;
        }
        if (auto r = brute_relation(p, x, y, 6)) {
          return "relation " + word_text(*r) + " holds";
        }
        stats.count("free_pairs");
        return std::nullopt;
      };
      return s;
    }

    Suite dichotomy() {
      Suite s;
      s.name     = "dichotomy";
      s.trials   = 1000;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p       = random_presentation(rng, {1, 4, true});
        auto const n = rng.uniform(1, 4);
        while (static_cast<long>(inst.words.size()) < n) {
          Word w = random_word(rng, inst.p, 4);
          if (!reduce(inst.p, w).empty()) {
            inst.words.push_back(w);
          }
        }
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p = inst.p;
        auto const  X = reduce_all(p, inst.words);
        bool        any = false;
        for (auto const& x : X) {
          any = any || !x.empty();
        }
        if (!any) {
          return std::nullopt;
        }
        auto const v = classify(p, X);
        switch (v.kind) {
          case Verdict::Kind::free_abelian: {
            if (v.rank < 1 || v.rank > p.size()) {
              return "rank " + std::to_string(v.rank) + " out of range";
            }
            if (!is_abelian(p, X)) {
              return std::string("FreeAbelian for a non-commuting set");
            }
            // Relations with coefficients in [-2, 2] must not exceed the
            // lattice rank implied by the verdict.
            std::vector<std::vector<Exponent>> relations;
            std::vector<long>                  n(X.size(), -2);
            while (true) {
              NormalForm acc;
              bool       zero = true;
              for (std::size_t i = 0; i < X.size(); ++i) {
                acc  = multiply(p, acc, power(p, X[i], n[i]));
                zero = zero && n[i] == 0;
              }
              if (!zero && acc.empty()) {
                relations.emplace_back(n.begin(), n.end());
              }
              std::size_t i = 0;
              while (i < n.size() && n[i] == 2) {
                n[i++] = -2;
              }
              if (i == n.size()) {
                break;
              }
              ++n[i];
            }
            if (integer_rank(relations) > X.size() - v.rank) {
              return "relations contradict rank " + std::to_string(v.rank);
            }
            stats.count("free_abelian");
            stats.max("max_rank", static_cast<long>(v.rank));
            return std::nullopt;
          }
          case Verdict::Kind::contains_free: {
            if (!v.certified) {
              return std::string("free pair not certified");
            }
            auto const& [x, y] = *v.witness;
            if (commute(p, x, y)) {
              return std::string("witness pair commutes");
            }
            if (auto r = brute_relation(p, x, y, 6)) {
              return "witness satisfies " + word_text(*r);
            }
            stats.count("contains_free");
            return std::nullopt;
          }
          default:
            return "verdict " + to_string(v.kind) + " " + v.reason;
        }
      };
      return s;
    }

    Suite rank_bound() {
      Suite s;
      s.name     = "rank_bound";
      s.trials   = 500;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p = random_presentation(rng, {1, 5, true});
        // A random clique, grown greedily from a random start.
        std::vector<vertex_type> order;
        for (auto v : inst.p.vertices()) {
          order.push_back(v);
        }
        for (std::size_t i = order.size(); i > 1; --i) {
          std::swap(order[i - 1], order[rng.below(i)]);
        }
        VertexSet K;
        for (auto v : order) {
          if (K.is_subset_of(inst.p.graph().neighbours(v)) && rng.coin()) {
            K.insert(v);
          }
        }
        if (K.empty()) {
          K.insert(order.front());
        }
        auto const sub = full_subpresentation(inst.p, K);
        inst.words.push_back(random_word(rng, inst.p, 3));
        auto const n = rng.uniform(1, 4);
        for (long i = 0; i < n; ++i) {
          Word w;
          for (auto const& syl : random_word(rng, sub.presentation, 3, 1)) {
            w.emplace_back(sub.to_parent[syl.vertex], syl.exponent);
          }
          inst.words.push_back(w);
        }
        inst.sets = {K};
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p = inst.p;
        auto const  g = reduce(p, inst.words[0]);
        std::vector<NormalForm>            X;
        std::vector<std::vector<Exponent>> coords;
        for (std::size_t i = 1; i < inst.words.size(); ++i) {
          auto const x = reduce(p, inst.words[i]);
          if (!support(x).is_subset_of(inst.sets[0])) {
            return std::nullopt;
          }
          std::vector<Exponent> c;
          for (auto v : inst.sets[0]) {
            c.push_back(vertex_projection(p, x, v));
          }
          coords.push_back(c);
          X.push_back(conjugate(p, x, invert(p, g)));
        }
        if (!is_abelian(p, X)) {
          return std::string("conjugated clique elements do not commute");
        }
        auto const r = abelian_rank(p, X);
        stats.max("max_rank", static_cast<long>(r.rank));
        if (r.rank > p.size()) {
          return "rank " + std::to_string(r.rank) + " exceeds |V| = "
                 + std::to_string(p.size());
        }
        auto const expected = integer_rank(coords);
        if (r.bound_limited) {
          stats.count("bound_limited");
        } else if (r.rank != expected) {
          return "rank " + std::to_string(r.rank) + " but the exponent vectors "
                 "have rank " + std::to_string(expected);
        }
        stats.count("checked");
        return std::nullopt;
      };
      return s;
    }

    Suite ex_2gen() {
      Suite s;
      s.name  = "ex_2gen";
      s.trials = 0;
      s.fixed = [](Stats& stats) -> Outcome {
        auto const p  = fixture_ex2gen();
        auto const a  = generator(p, 0);
        auto const b  = generator(p, 1);
        auto const c  = generator(p, 2);
        auto const x  = multiply(p, a, c);
        auto const y  = multiply(p, b, c);
        auto const c3 = power(p, c, 3);
        if (power(p, x, 3) != c3 || power(p, y, 3) != c3) {
          return std::string("(ac)^3 = (bc)^3 = c^3 fails");
        }
        if (!commute(p, c3, x) || !commute(p, c3, y)) {
          return std::string("c^3 is not central in <ac, bc>");
        }
        auto const rel = find_relation(p, x, y, 6);
        if (!rel || !evaluate(p, *rel, x, y).empty() || rel->size() != 6) {
          return std::string("relation search at R = 6 misses x^3 = y^3");
        }
        if (find_relation(p, x, y, 5)) {
          return std::string("unexpected relation shorter than 6");
        }
        if (!evaluate(p, {1, 1, 1, -2, -2, -2}, x, y).empty()) {
          return std::string("x^3 y^-3 is not trivial");
        }
        std::vector<NormalForm> X{x, y};
        auto const              v = classify(p, X);
        if (v.certified) {
          return std::string("classify certified a free pair");
        }
        if (!v.search || !v.search->generator_relation) {
          return std::string("classify did not record the generator relation");
        }
        stats.count("relation_length", static_cast<long>(rel->size()));
        return std::nullopt;
      };
      return s;
    }

    Outcome bass_serre_element(Presentation const& p, Splitting const& s,
                               NormalForm const& x, Stats& stats) {
      auto const act    = classify_action(p, s, x);
      auto const oracle = tree_displacement_oracle(p, s, x);
      if (act.elliptic != (oracle == 0)
          || (!act.elliptic && act.translation_length != oracle)) {
        return format(p, x) + " at " + p.label(s.v) + ": translation "
               + std::to_string(act.translation_length) + ", oracle "
               + std::to_string(oracle);
      }
      auto const form = alternating_form(p, s, x);
      Word       w    = form.prefix.word();
      for (std::size_t i = 0; i < form.factors.size(); ++i) {
        auto const& f = form.factors[i];
        if (support(f.element).is_subset_of(s.C)
            || (i > 0 && f.side == form.factors[i - 1].side)) {
          return "alternating form of " + format(p, x) + " is not strict";
        }
        w.insert(w.end(), f.element.word().begin(), f.element.word().end());
      }
      if (reduce(p, w) != x) {
        return "alternating form of " + format(p, x) + " does not multiply back";
      }
      std::vector<NormalForm> one{x};
      bool const conjugable
          = conjugate_into_full(p, one, s.A).status
                == ConjugatorSearch::Status::found
            || conjugate_into_full(p, one, s.B).status
                   == ConjugatorSearch::Status::found;
      if (conjugable != act.elliptic) {
        return format(p, x) + ": ellipticity disagrees with conjugation into "
                              "a factor";
      }
      stats.count(act.elliptic ? "elliptic" : "hyperbolic");
      return std::nullopt;
    }

    Suite bass_serre() {
      Suite s;
      s.name  = "bass_serre";
      s.trials = 300;
      s.fixed = [](Stats& stats) -> Outcome {
        auto const  p = fixture_racg2();
        auto const  x = multiply(p, generator(p, 0), generator(p, 1));
        auto const  sp = split_at(p, 0);
        auto const  act = classify_action(p, sp, x);
        if (act.elliptic || act.translation_length != 2
            || tree_displacement_oracle(p, sp, x) != 2) {
          return std::string("||uw|| is not 2 in Z/2 * Z/2");
        }
        // Exhaustive radius-6 balls on small presentations.
        std::vector<std::string> specs = {
            "vertex u Z/2\nvertex w Z/2\n",
            "vertex u Z/2\nvertex w Z/3\n",
            "vertex u Z/3\nvertex w Z\n",
            "vertex u Z\nvertex w Z\n",
            "vertex a Z/2\nvertex b Z\nvertex c Z/3\nedge a b\n",
            "vertex a Z/2\nvertex b Z/3\nvertex c Z\n",
        };
        for (auto const& text : specs) {
          auto const p3   = parse_spec(text);
          auto const ball = enumerate_ball(p3, 6, 1);
          for (vertex_type v = 0; v < p3.size(); ++v) {
            auto const sp3 = split_at(p3, v);
            if (sp3.degenerate) {
              continue;
            }
            for (auto const& y : ball.elements) {
              if (auto r = bass_serre_element(p3, sp3, y, stats)) {
                return r;
              }
            }
          }
        }
        return std::nullopt;
      };
      s.generate = [](Rng& rng) {
        while (true) {
          Instance inst;
          inst.p = random_presentation(rng, {2, 3});
          std::vector<vertex_type> proper;
          for (auto v : inst.p.vertices()) {
            if (!split_at(inst.p, v).degenerate) {
              proper.push_back(v);
            }
          }
          if (proper.empty()) {
            continue;
          }
          inst.ints  = {static_cast<long>(proper[rng.below(proper.size())])};
          inst.words = {random_word(rng, inst.p, 6), random_word(rng, inst.p, 3)};
          return inst;
        }
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p  = inst.p;
        auto const  sp = split_at(p, static_cast<vertex_type>(inst.ints[0]));
        auto const  x  = reduce(p, inst.words[0]);
        if (auto r = bass_serre_element(p, sp, x, stats)) {
          return r;
        }
        auto const act = classify_action(p, sp, x);
        if (!act.elliptic) {
          for (long k : {2, 3}) {
            auto const xk   = power(p, x, k);
            auto const actk = classify_action(p, sp, xk);
            auto const want = static_cast<std::size_t>(k) * act.translation_length;
            if (actk.translation_length != want
                || tree_displacement_oracle(p, sp, xk) != want) {
              return "||x^" + std::to_string(k) + "|| is not "
                     + std::to_string(k) + "||x|| for x = " + format(p, x);
            }
          }
          stats.count("power_checks");
        }
        auto const g  = reduce(p, inst.words[1]);
        auto const gx = conjugate(p, x, g);
        if (classify_action(p, sp, gx).translation_length
            != act.translation_length) {
          return "translation length is not a conjugacy invariant for "
                 + format(p, x);
        }
        return std::nullopt;
      };
      return s;
    }

    Suite closure_minimality() {
      Suite s;
      s.name     = "closure_minimality";
      s.trials   = 300;
      s.generate = [](Rng& rng) {
        Instance inst;
        inst.p       = random_presentation(rng, {1, 4});
        auto const n = rng.uniform(1, 3);
        for (long i = 0; i < n; ++i) {
          inst.words.push_back(random_word(rng, inst.p, 4));
        }
        return inst;
      };
      s.property = [](Instance const& inst, Stats& stats) -> Outcome {
        auto const& p  = inst.p;
        auto const  X  = reduce_all(p, inst.words);
        auto const  pc = parabolic_closure(p, X);
        if (pc.budget_exhausted) {
          return std::string("closure budget exhausted");
        }
        auto const& P = pc.subgroup;
        auto const  E = P.base();
        for (auto const& x : X) {
          if (!element_in_parabolic(p, x, P)) {
            return format(p, x) + " is outside its closure " + format(p, P);
          }
        }
        if (!E.is_subset_of(support(X))) {
          return std::string("essential support exceeds the support");
        }
        if (conjugate_into_full(p, X, E).status != ConjugatorSearch::Status::found) {
          return std::string("cannot conjugate into the essential support");
        }
        // No proper subset of E admits a conjugator from a small ball.
        auto const ball = enumerate_ball(p, 2, 1);
        for (auto const& g : ball.elements) {
          VertexSet joint;
          for (auto const& x : X) {
            joint |= support(conjugate(p, x, g));
          }
          if (joint.is_subset_of(E) && joint != E) {
            return "conjugating by " + format(p, g) + " lands in the smaller "
                   + format(p, joint);
          }
        }
        // The retraction onto E is injective on ⟨X⟩.
        std::unordered_map<NormalForm, NormalForm> seen;
        std::optional<std::string>                 clash;
        for_each_free_word(p, X, 3, [&](FreeWord const& w, NormalForm const& v) {
          auto const r = retraction(p, E, v);
          auto [it, fresh] = seen.try_emplace(r, v);
          if (it->second != v) {
            clash = "retraction onto the essential support is not injective at "
                    + word_text(w);
            return false;
          }
          return true;
        });
        if (clash) {
          return clash;
        }
        stats.max("max_essential_support", static_cast<long>(E.size()));
        return std::nullopt;
      };
      return s;
    }

    std::vector<Suite> const& registry() {
      static std::vector<Suite> const suites = {
          nf_minimality(), nf_congruence(),     prop_3_4(),
          prop_3_13(),     thm_5_1(),           kernel_roundtrip(),
          prop_5_6(),      baudisch(),          dichotomy(),
          rank_bound(),    ex_2gen(),           bass_serre(),
          closure_minimality()};
      return suites;
    }

    Suite const& lookup(std::string const& name) {
      for (auto const& s : registry()) {
        if (s.name == name) {
          return s;
        }
      }
      throw std::invalid_argument("unknown suite '" + name + "'");
    }

  }  // namespace

  std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (auto const& s : registry()) {
      names.push_back(s.name);
    }
    return names;
  }

  std::size_t default_trials(std::string const& name) {
    return lookup(name).trials;
  }

  SuiteReport check_suite(std::string const& name,
                          std::uint64_t      seed,
                          std::size_t        trials) {
    auto const& suite = lookup(name);
    SuiteReport report;
    report.name   = name;
    report.seed   = seed;
    report.trials = suite.generate ? trials : 0;
    Stats stats;

    if (suite.fixed) {
      Outcome r;
      try {
        r = suite.fixed(stats);
      } catch (std::exception const& e) {
        r = std::string("exception: ") + e.what();
      }
      if (r) {
        ++report.failures;
        report.counterexample = "fixture: " + *r;
      }
    }
    if (suite.generate) {
      Rng rng(seed);
      for (std::size_t t = 0; t < trials; ++t) {
        Instance inst = suite.generate(rng);
        if (auto r = guarded(suite.property, inst, stats)) {
          ++report.failures;
          if (!report.counterexample) {
            auto [small, reason] = shrink(suite.property, inst, *r);
            report.counterexample = "trial " + std::to_string(t) + ": "
                                    + describe(small) + " :: " + reason;
          }
        }
      }
    }
    for (auto const& [key, value] : stats.values()) {
      report.notes.push_back(key + " = " + std::to_string(value));
    }
    return report;
  }

  std::string to_string(SuiteReport const& r) {
    std::ostringstream out;
    out << "suite " << r.name << " seed " << r.seed << " trials " << r.trials
        << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (!r.passed()) {
      out << "  failures: " << r.failures << "\n";
    }
    if (r.counterexample) {
      out << "  counterexample: " << *r.counterexample << "\n";
    }
    for (auto const& note : r.notes) {
      out << "  " << note << "\n";
    }
    return out.str();
  }

}  // namespace gpc
