#include "gpc/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpc/kernel.hpp"

namespace gpc {

  namespace {
    using Rational = boost::multiprecision::cpp_rational;

    NormalForm evaluate_letters(Presentation const&            p,
                                FreeWord const&                w,
                                std::vector<NormalForm> const& gens,
                                std::vector<NormalForm> const& inverses) {
      Word out;
      for (int letter : w) {
        auto i = static_cast<std::size_t>(std::abs(letter)) - 1;
        if (i >= gens.size()) {
          throw std::out_of_range("free word letter out of range");
        }
        auto const& g = letter > 0 ? gens[i] : inverses[i];
        out.insert(out.end(), g.word().begin(), g.word().end());
      }
      return reduce(p, out);
    }

    // Row-echelon basis over the rationals; add() reports whether the rank
    // grew.
    class RankTracker {
     public:
      explicit RankTracker(std::size_t n) : n_(n) {}

      bool add(std::vector<Exponent> const& v) {
        std::vector<Rational> row(v.begin(), v.end());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
          auto const c = pivots_[r];
          if (row[c] != 0) {
            Rational f = row[c] / rows_[r][c];
            for (std::size_t j = 0; j < n_; ++j) {
              row[j] -= f * rows_[r][j];
            }
          }
        }
        for (std::size_t c = 0; c < n_; ++c) {
          if (row[c] != 0) {
            rows_.push_back(std::move(row));
            pivots_.push_back(c);
            return true;
          }
        }
        return false;
      }
      std::size_t rank() const {
        return rows_.size();
      }

     private:
      std::size_t                        n_;
      std::vector<std::vector<Rational>> rows_;
      std::vector<std::size_t>           pivots_;
    };

    using IntMatrix = std::vector<std::vector<Exponent>>;

    // Z-basis of {c in Z^k : A c = 0} by unimodular column operations.
    IntMatrix integer_kernel(IntMatrix A, std::size_t k) {
      IntMatrix U(k, std::vector<Exponent>(k, 0));
      for (std::size_t i = 0; i < k; ++i) {
        U[i][i] = 1;
      }
      auto combine = [&](std::size_t dst, std::size_t src, Exponent const& f) {
        for (auto& row : A) {
          row[dst] -= f * row[src];
        }
        for (auto& row : U) {
          row[dst] -= f * row[src];
        }
      };
      auto swap_columns = [&](std::size_t i, std::size_t j) {
        for (auto& row : A) {
          std::swap(row[i], row[j]);
        }
        for (auto& row : U) {
          std::swap(row[i], row[j]);
        }
      };
      std::size_t c = 0;
      for (std::size_t r = 0; r < A.size() && c < k; ++r) {
        for (;;) {
          std::size_t best = k;
          for (std::size_t j = c; j < k; ++j) {
            if (A[r][j] != 0 && (best == k || abs(A[r][j]) < abs(A[r][best]))) {
              best = j;
            }
          }
          if (best == k) {
            break;
          }
          swap_columns(c, best);
          bool done = true;
          for (std::size_t j = c + 1; j < k; ++j) {
            if (A[r][j] != 0) {
              combine(j, c, A[r][j] / A[r][c]);
              done = done && A[r][j] == 0;
            }
          }
          if (done) {
            ++c;
            break;
          }
        }
      }
      IntMatrix basis;
      for (std::size_t j = c; j < k; ++j) {
        std::vector<Exponent> v(k);
        for (std::size_t i = 0; i < k; ++i) {
          v[i] = U[i][j];
        }
        basis.push_back(std::move(v));
      }
      return basis;
    }

    NormalForm evaluate_vector(Presentation const&          p,
                               std::span<NormalForm const>  X,
                               std::vector<Exponent> const& c) {
      NormalForm acc;
      for (std::size_t i = 0; i < X.size(); ++i) {
        acc = multiply(p, acc, power(p, X[i], c[i]));
      }
      return acc;
    }

    // Given a lattice K of coefficient vectors whose images in ⟨X⟩ all have
    // finite order and which contains every relation, ⟨X⟩ has torsion iff
    // some basis vector of K maps to a nontrivial element.
    bool has_torsion(Presentation const&         p,
                     std::span<NormalForm const> X,
                     IntMatrix const&            K) {
      return std::any_of(K.begin(), K.end(), [&](auto const& c) {
        return !evaluate_vector(p, X, c).empty();
      });
    }

    bool is_clique(Presentation const& p, VertexSet S) {
      for (auto v : S) {
        if (!(S - VertexSet{v}).is_subset_of(p.graph().neighbours(v))) {
          return false;
        }
      }
      return true;
    }

    // Every product ∏ x_i^{n_i}, |n_i| <= B, keyed by value, in
    // lexicographic order of the coefficient vectors.
    std::vector<std::pair<NormalForm, std::vector<Exponent>>>
    box_products(Presentation const&         p,
                 std::span<NormalForm const> X,
                 long                        B) {
      std::vector<std::pair<NormalForm, std::vector<Exponent>>> out;
      std::vector<Exponent> coeffs(X.size());
      std::vector<std::vector<NormalForm>> powers(X.size());
      for (std::size_t i = 0; i < X.size(); ++i) {
        for (long n = -B; n <= B; ++n) {
          powers[i].push_back(power(p, X[i], n));
        }
      }
      auto rec = [&](auto&& self, std::size_t i, NormalForm const& acc) -> void {
        if (i == X.size()) {
          out.emplace_back(acc, coeffs);
          return;
        }
        for (long n = -B; n <= B; ++n) {
          coeffs[i] = n;
          self(self, i + 1, multiply(p, acc, powers[i][n + B]));
        }
      };
      rec(rec, 0, NormalForm());
      return out;
    }

    struct Relations {
      std::size_t rank = 0;
      IntMatrix   basis;
    };

    Relations relation_lattice(Presentation const&         p,
                               std::span<NormalForm const> X,
                               long                        B) {
      std::size_t const k = X.size();
      std::size_t const h = k / 2;
      RankTracker       tracker(k);
      IntMatrix         basis;
      auto add = [&](std::vector<Exponent> v) {
        if (tracker.add(v)) {
          basis.push_back(std::move(v));
        }
      };
      auto left  = box_products(p, X.subspan(0, h), B);
      auto right = box_products(p, X.subspan(h), B);

      // Relations are spanned by differences within a value class on each
      // side and one representative per matching pair of classes.
      std::unordered_map<NormalForm, std::vector<Exponent>> left_rep;
      std::unordered_map<NormalForm, std::vector<Exponent>> right_rep;
      auto pad = [&](std::vector<Exponent> const& l,
                     std::vector<Exponent> const& r) {
        std::vector<Exponent> v(l);
        v.insert(v.end(), r.begin(), r.end());
        return v;
      };
      std::vector<Exponent> zero_l(h, 0), zero_r(k - h, 0);
      for (auto& [value, coeffs] : left) {
        auto [it, fresh] = left_rep.try_emplace(value, coeffs);
        if (!fresh) {
          std::vector<Exponent> d(h);
          for (std::size_t i = 0; i < h; ++i) {
            d[i] = coeffs[i] - it->second[i];
          }
          add(pad(d, zero_r));
        }
      }
      for (auto& [value, coeffs] : right) {
        auto [it, fresh] = right_rep.try_emplace(value, coeffs);
        if (!fresh) {
          std::vector<Exponent> d(k - h);
          for (std::size_t i = 0; i < k - h; ++i) {
            d[i] = coeffs[i] - it->second[i];
          }
          add(pad(zero_l, d));
        } else if (auto m = left_rep.find(invert(p, value));
                   m != left_rep.end()) {
          add(pad(m->second, coeffs));
        }
        if (tracker.rank() == k) {
          break;
        }
      }
      return {tracker.rank(), std::move(basis)};
    }

    bool power_commutation(Presentation const& p,
                           NormalForm const&   u,
                           NormalForm const&   v,
                           std::size_t         bound) {
      for (std::size_t k = 1; k <= bound; ++k) {
        auto uk = power(p, u, static_cast<long>(k));
        for (std::size_t m = 1; m <= bound; ++m) {
          if (commute(p, uk, power(p, v, static_cast<long>(m)))) {
            return true;
          }
        }
      }
      return false;
    }
  }  // namespace

  NormalForm evaluate(Presentation const& p,
                      FreeWord const&     w,
                      NormalForm const&   x,
                      NormalForm const&   y) {
    return evaluate_letters(p, w, {x, y}, {invert(p, x), invert(p, y)});
  }

  std::string to_string(FreeWord const& w) {
    if (w.empty()) {
      return "1";
    }
    auto name = [](int letter) {
      auto i = static_cast<std::size_t>(std::abs(letter)) - 1;
      static char const* const names[] = {"x", "y", "z", "w"};
      return i < 4 ? std::string(names[i]) : "g" + std::to_string(i + 1);
    };
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      int const   g = std::abs(w[i]);
      long        e = 0;
      std::size_t j = i;
      for (; j < w.size() && std::abs(w[j]) == g; ++j) {
        e += w[j] > 0 ? 1 : -1;
      }
      if (!out.empty()) {
        out += '*';
      }
      out += name(g);
      if (e != 1) {
        out += '^' + std::to_string(e);
      }
      i = j;
    }
    return out;
  }

  bool is_abelian(Presentation const& p, std::span<NormalForm const> X) {
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = i + 1; j < X.size(); ++j) {
        if (!commute(p, X[i], X[j])) {
          return false;
        }
      }
    }
    return true;
  }

  AbelianRank abelian_rank(Presentation const&         p,
                           std::span<NormalForm const> X,
                           std::size_t                 exponent_bound) {
    AbelianRank result;
    auto const  supp = support(X);
    auto const  k    = X.size();

    if (is_clique(p, supp)) {
      // ⟨X⟩ sits in a direct product of cyclic groups. Vectors killing the
      // infinite coordinates map to torsion.
      IntMatrix free_part;
      for (auto u : supp) {
        if (!p.order(u).is_finite()) {
          std::vector<Exponent> row;
          for (auto const& x : X) {
            row.push_back(vertex_projection(p, x, u));
          }
          free_part.push_back(std::move(row));
        }
      }
      auto K         = integer_kernel(free_part, k);
      result.rank    = k - K.size();
      result.torsion = has_torsion(p, X, K);
      return result;
    }

    if (exponent_bound == 0) {
      throw std::invalid_argument("abelian_rank: exponent bound must be positive");
    }
    std::size_t constexpr max_bound = 64;
    std::size_t B                   = std::min(exponent_bound, max_bound);
    auto relations = relation_lattice(p, X, static_cast<long>(B));
    result.bound_limited = true;
    while (B < max_bound) {
      auto next = relation_lattice(p, X, static_cast<long>(2 * B));
      B *= 2;
      bool const stable = next.rank == relations.rank;
      relations         = std::move(next);
      if (stable) {
        result.bound_limited = false;
        break;
      }
    }
    result.bound = B;
    result.rank  = k - relations.rank;
    // The saturation of the relations found so far.
    auto K = integer_kernel(integer_kernel(relations.basis, k), k);
    result.torsion = has_torsion(p, X, K);
    return result;
  }

  std::optional<FreeWord> find_relation(Presentation const& p,
                                        NormalForm const&   x,
                                        NormalForm const&   y,
                                        std::size_t         max_length) {
    static int const letters[] = {1, -1, 2, -2};
    NormalForm const gens[]    = {x, invert(p, x), y, invert(p, y)};
    FreeWord         word;

    for (std::size_t depth = 1; depth <= max_length; ++depth) {
      auto rec = [&](auto&& self, NormalForm const& acc) -> bool {
        if (word.size() == depth) {
          return acc.empty();
        }
        for (int i = 0; i < 4; ++i) {
          if (!word.empty() && word.back() == -letters[i]) {
            continue;
          }
          word.push_back(letters[i]);
          if (self(self, multiply(p, acc, gens[i]))) {
            return true;
          }
          word.pop_back();
        }
        return false;
      };
      if (rec(rec, NormalForm())) {
        return word;
      }
    }
    return std::nullopt;
  }

  std::string to_string(Verdict::Kind k) {
    switch (k) {
      case Verdict::Kind::trivial:
        return "Trivial";
      case Verdict::Kind::finite_cyclic:
        return "FiniteCyclic";
      case Verdict::Kind::infinite_cyclic:
        return "InfiniteCyclic";
      case Verdict::Kind::free_abelian:
        return "FreeAbelian";
      case Verdict::Kind::infinite_dihedral:
        return "InfiniteDihedral";
      case Verdict::Kind::contains_free:
        return "ContainsNonabelianFree";
      case Verdict::Kind::unknown:
        return "Unknown";
    }
    return "Unknown";
  }

  Verdict classify(Presentation const&         p,
                   std::span<NormalForm const> X,
                   ClassifyOptions const&      options) {
    Verdict                 verdict;
    std::vector<NormalForm> gens;
    for (auto const& x : X) {
      if (!belongs_to(p, x)) {
        throw std::invalid_argument(
            "classify: element does not belong to the presentation");
      }
      if (!x.empty()) {
        gens.push_back(x);
      }
    }
    if (gens.empty()) {
      verdict.kind = Verdict::Kind::trivial;
      return verdict;
    }

    auto const  compressed = compress(p, gens, options.budget);
    auto const& q          = compressed.presentation;
    auto const& Y          = compressed.images;
    verdict.budget_exhausted = compressed.budget_exhausted;
    bool const torsion_free  = q.torsion_free_on(q.vertices());

    if (is_abelian(q, Y)) {
      if (gens.size() == 1) {
        if (auto n = order(p, gens.front())) {
          verdict.kind  = Verdict::Kind::finite_cyclic;
          verdict.order = *n;
        } else if (torsion_free) {
          verdict.kind = Verdict::Kind::free_abelian;
          verdict.rank = 1;
        } else {
          verdict.kind = Verdict::Kind::infinite_cyclic;
        }
        return verdict;
      }
      auto r = abelian_rank(q, Y, options.exponent_bound);
      verdict.bound_limited = r.bound_limited;
      if (!r.torsion) {
        verdict.kind = Verdict::Kind::free_abelian;
        verdict.rank = r.rank;
      } else {
        verdict.kind   = Verdict::Kind::unknown;
        verdict.rank   = r.rank;
        verdict.reason = "abelian with torsion, free rank "
                         + std::to_string(r.rank);
      }
      return verdict;
    }

    // Some pair of generators fails to commute.
    std::size_t wi = 0, wj = 0;
    for (std::size_t j = 1; j < Y.size() && wj == 0; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!commute(q, Y[i], Y[j])) {
          wi = i;
          wj = j;
          break;
        }
      }
    }

    if (torsion_free) {
      verdict.kind      = Verdict::Kind::contains_free;
      verdict.witness   = std::make_pair(gens[wi], gens[wj]);
      verdict.certified = true;
      return verdict;
    }

    auto is_involution = [&](NormalForm const& y) {
      auto n = order(q, y);
      return n && *n == 2;
    };
    if (Y.size() == 2 && is_involution(Y[0]) && is_involution(Y[1])) {
      if (!order(q, multiply(q, Y[0], Y[1]))) {
        verdict.kind    = Verdict::Kind::infinite_dihedral;
        verdict.witness = std::make_pair(gens[0], gens[1]);
      } else {
        verdict.kind   = Verdict::Kind::unknown;
        verdict.reason = "finite, not classified further";
      }
      return verdict;
    }

    Verdict::Search search;
    search.candidate_length   = options.candidate_length;
    search.relation_length    = options.relation_length;
    search.generator_relation = find_relation(q, Y[wi], Y[wj],
                                              options.relation_length);

    std::vector<NormalForm> y_inv, g_inv;
    for (std::size_t i = 0; i < Y.size(); ++i) {
      y_inv.push_back(invert(q, Y[i]));
      g_inv.push_back(invert(p, gens[i]));
    }
    auto acceptable = [&](NormalForm const& u, NormalForm const& v) {
      return !commute(q, u, v) && !order(q, u) && !order(q, v)
             && !find_relation(q, u, v, options.relation_length)
             && !power_commutation(q, u, v, options.relation_length);
    };

    // Candidates: reduced words in the generators, by length.
    std::vector<FreeWord>                 candidates;
    std::vector<NormalForm>               values;
    std::unordered_set<NormalForm>        seen{NormalForm()};
    std::deque<FreeWord>                  queue{FreeWord{}};
    int const                             letters = static_cast<int>(Y.size());
    while (!queue.empty() && search.pairs_tested < options.max_pairs) {
      FreeWord w = std::move(queue.front());
      queue.pop_front();
      if (w.size() == options.candidate_length) {
        continue;
      }
      for (int g = 1; g <= letters; ++g) {
        for (int letter : {g, -g}) {
          if (!w.empty() && w.back() == -letter) {
            continue;
          }
          FreeWord next = w;
          next.push_back(letter);
          auto value = evaluate_letters(q, next, Y, y_inv);
          queue.push_back(next);
          if (!seen.insert(value).second) {
            continue;
          }
          candidates.push_back(next);
          values.push_back(value);
          std::size_t const j = values.size() - 1;
          for (std::size_t i = 0; i < j; ++i) {
            if (search.pairs_tested == options.max_pairs) {
              break;
            }
            ++search.pairs_tested;
            if (acceptable(values[i], values[j])) {
              verdict.kind      = Verdict::Kind::contains_free;
              verdict.certified = false;
              verdict.witness   = std::make_pair(
                  evaluate_letters(p, candidates[i], gens, g_inv),
                  evaluate_letters(p, candidates[j], gens, g_inv));
              verdict.search = std::move(search);
              return verdict;
            }
          }
        }
      }
    }
    verdict.kind   = Verdict::Kind::unknown;
    verdict.reason = "no free pair found within the search bounds";
    verdict.search = std::move(search);
    return verdict;
  }

}  // namespace gpc
