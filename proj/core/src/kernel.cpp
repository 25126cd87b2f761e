#include "gpc/kernel.hpp"

#include <mutex>
#include <stdexcept>

std::size_t std::hash<gpc::DeltaVertex>::operator()(
    gpc::DeltaVertex const& d) const noexcept {
  std::size_t h = std::hash<gpc::Exponent>()(d.g);
  h ^= d.u + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(d.kind) + 0x9e3779b97f4a7c15ULL + (h << 6)
       + (h >> 2);
  return h;
}

namespace gpc {

  KernelPresentation::KernelPresentation(Presentation base,
                                         vertex_type  a,
                                         Realization  mode)
      : base_(std::move(base)), a_(a),
        mutex_(std::make_unique<std::shared_mutex>()) {
    check_vertex(a, base_.size());
    B_ = base_.graph().neighbours(a);
    C_ = base_.vertices() - B_ - VertexSet{a};
    if (mode == Realization::lazy) {
      return;
    }
    auto total = full_size();
    if (!total) {
      throw std::invalid_argument(
          "eager kernel realization needs a finite vertex group");
    }
    if (*total > max_vertices) {
      throw std::length_error("kernel graph exceeds "
                              + std::to_string(max_vertices) + " vertices");
    }
    for (auto u : B_) {
      realize(DeltaVertex::shared_vertex(u));
    }
    Exponent const& n = base_.order(a).order();
    for (Exponent g = 0; g < n; ++g) {
      for (auto u : C_) {
        realize(DeltaVertex::coset_vertex(g, u));
      }
    }
  }

  std::optional<Exponent> KernelPresentation::full_size() const {
    auto const& o = base_.order(a_);
    if (!o.is_finite()) {
      return std::nullopt;
    }
    return Exponent(B_.size()) + o.order() * C_.size();
  }

  DeltaVertex KernelPresentation::normalized(DeltaVertex d) const {
    check_vertex(d.u, base_.size());
    if (d.kind == DeltaVertex::Kind::shared) {
      if (!B_.contains(d.u)) {
        throw std::invalid_argument("shared kernel vertex outside link(a)");
      }
      d.g = 0;
    } else {
      if (!C_.contains(d.u)) {
        throw std::invalid_argument("coset kernel vertex outside C");
      }
      d.g = base_.order(a_).canonical(d.g);
    }
    return d;
  }

  std::string KernelPresentation::fresh_label(DeltaVertex const& d) const {
    std::string label = base_.label(d.u);
    if (d.kind == DeltaVertex::Kind::shared) {
      return label;
    }
    label += '.';
    label += d.g < 0 ? "m" + Exponent(-d.g).str() : d.g.str();
    while (base_.find(label) || delta_.find(label)) {
      label += '_';
    }
    return label;
  }

  vertex_type KernelPresentation::realize(DeltaVertex const& raw) {
    DeltaVertex d = normalized(raw);
    {
      std::shared_lock lock(*mutex_);
      if (auto it = ids_.find(d); it != ids_.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(*mutex_);
    if (auto it = ids_.find(d); it != ids_.end()) {
      return it->second;
    }
    if (vertices_.size() >= max_vertices) {
      throw std::length_error("kernel graph exceeds "
                              + std::to_string(max_vertices)
                              + " realized vertices");
    }
    auto id = delta_.add_vertex(fresh_label(d), base_.order(d.u));
    for (vertex_type other = 0; other < id; ++other) {
      auto const& e = vertices_[other];
      bool const  same_coset = d.kind == DeltaVertex::Kind::shared
                              || e.kind == DeltaVertex::Kind::shared
                              || d.g == e.g;
      if (same_coset && base_.adjacent(d.u, e.u)) {
        delta_.add_edge(id, other);
      }
    }
    vertices_.push_back(d);
    ids_.emplace(std::move(d), id);
    return id;
  }

  std::optional<vertex_type> KernelPresentation::find(DeltaVertex const& raw) const {
    DeltaVertex      d = normalized(raw);
    std::shared_lock lock(*mutex_);
    if (auto it = ids_.find(d); it != ids_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  DeltaVertex KernelPresentation::vertex(vertex_type id) const {
    std::shared_lock lock(*mutex_);
    check_vertex(id, vertices_.size());
    return vertices_[id];
  }

  std::size_t KernelPresentation::realized_size() const {
    std::shared_lock lock(*mutex_);
    return vertices_.size();
  }

  Presentation KernelPresentation::delta_presentation() const {
    std::shared_lock lock(*mutex_);
    return delta_;
  }

  KernelPresentation kernel_presentation(Presentation const& p, vertex_type a) {
    check_vertex(a, p.size());
    KernelPresentation probe(p, a, KernelPresentation::Realization::lazy);
    auto               total = probe.full_size();
    if (total && *total <= max_vertices) {
      return KernelPresentation(p, a, KernelPresentation::Realization::eager);
    }
    return probe;
  }

  Exponent vertex_projection(Presentation const& p,
                             NormalForm const&   x,
                             vertex_type         v) {
    Exponent sum = 0;
    for (auto const& s : x.syllables()) {
      if (s.vertex == v) {
        sum += s.exponent;
      }
    }
    return p.order(v).canonical(sum);
  }

  NormalForm psi(KernelPresentation& k, NormalForm const& w) {
    auto const& p = k.base();
    if (!belongs_to(p, w)) {
      throw std::invalid_argument("psi: word does not belong to the base");
    }
    if (vertex_projection(p, w, k.a()) != 0) {
      throw std::invalid_argument("psi: word is not in the kernel");
    }
    Exponent prefix = 0;
    Word     out;
    for (auto const& s : w.syllables()) {
      if (s.vertex == k.a()) {
        prefix = p.order(k.a()).canonical(prefix + s.exponent);
        continue;
      }
      auto d = k.shared_vertices().contains(s.vertex)
                   ? DeltaVertex::shared_vertex(s.vertex)
                   : DeltaVertex::coset_vertex(prefix, s.vertex);
      out.emplace_back(k.realize(d), s.exponent);
    }
    return reduce(k.delta_presentation(), out);
  }

  NormalForm phi(KernelPresentation const& k, NormalForm const& w) {
    auto const& p = k.base();
    Word        out;
    for (auto const& s : w.syllables()) {
      auto d = k.vertex(s.vertex);
      if (d.kind == DeltaVertex::Kind::shared) {
        out.emplace_back(d.u, s.exponent);
        continue;
      }
      if (d.g != 0) {
        out.emplace_back(k.a(), d.g);
      }
      out.emplace_back(d.u, s.exponent);
      if (d.g != 0) {
        out.emplace_back(k.a(), -d.g);
      }
    }
    return reduce(p, out);
  }

  namespace {
    NormalForm relabel(Presentation const&                            target,
                       std::vector<std::optional<vertex_type>> const& from,
                       NormalForm const&                              x) {
      Word w;
      for (auto const& s : x.syllables()) {
        if (s.vertex >= from.size() || !from[s.vertex]) {
          throw std::invalid_argument(
              "compress: element leaves the subgroup's domain");
        }
        w.emplace_back(*from[s.vertex], s.exponent);
      }
      return reduce(target, w);
    }
  }  // namespace

  CompressResult compress(Presentation const&         p,
                          std::span<NormalForm const> X,
                          std::optional<std::size_t>  budget) {
    CompressResult result;
    result.input        = p;
    result.presentation = p;
    result.images.assign(X.begin(), X.end());
    for (auto const& x : result.images) {
      if (!belongs_to(p, x)) {
        throw std::invalid_argument("compress: element does not belong to "
                                    "the presentation");
      }
    }

    while (true) {
      auto const& q       = result.presentation;
      auto        closure = parabolic_closure(q, result.images, budget);
      result.budget_exhausted |= closure.budget_exhausted;
      VertexSet const E = closure.subgroup.base();

      if (E != q.vertices() || !closure.subgroup.conjugator().empty()) {
        CompressStage stage;
        stage.kind              = CompressStage::Kind::projection;
        stage.conjugator        = closure.subgroup.conjugator();
        stage.essential_support = E;
        auto sub                = full_subpresentation(q, E);
        for (auto const& x : result.images) {
          auto y = retraction(q, E, conjugate(q, x, stage.conjugator));
          stage.images.push_back(relabel(sub.presentation, sub.from_parent, y));
        }
        stage.presentation = std::move(sub.presentation);
        stage.to_parent    = std::move(sub.to_parent);
        result.presentation = stage.presentation;
        result.images       = stage.images;
        result.log.push_back(std::move(stage));
        continue;
      }

      std::optional<vertex_type> trivial;
      for (auto t : q.vertices()) {
        bool killed = true;
        for (auto const& x : result.images) {
          if (vertex_projection(q, x, t) != 0) {
            killed = false;
            break;
          }
        }
        if (killed) {
          trivial = t;
          break;
        }
      }
      if (!trivial) {
        return result;
      }

      CompressStage stage;
      stage.kind   = CompressStage::Kind::kernel;
      stage.vertex = *trivial;
      stage.kernel = std::make_shared<KernelPresentation>(
          q, *trivial, KernelPresentation::Realization::lazy);
      std::vector<NormalForm> raw;
      for (auto const& x : result.images) {
        raw.push_back(psi(*stage.kernel, x));
      }
      stage.presentation = stage.kernel->delta_presentation();
      for (auto const& y : raw) {
        stage.images.push_back(reduce(stage.presentation, y.word()));
      }
      result.presentation = stage.presentation;
      result.images       = stage.images;
      result.log.push_back(std::move(stage));
    }
  }

  NormalForm CompressResult::map(NormalForm const& x) const {
    Presentation const* current = &input;
    NormalForm          y       = x;
    for (auto const& stage : log) {
      if (stage.kind == CompressStage::Kind::projection) {
        auto const E = stage.essential_support;
        auto       z = conjugate(*current, y, stage.conjugator);
        if (!support(z).is_subset_of(E)) {
          throw std::invalid_argument(
              "compress: element leaves the subgroup's domain");
        }
        std::vector<std::optional<vertex_type>> from(current->size());
        for (vertex_type i = 0; i < stage.to_parent.size(); ++i) {
          from[stage.to_parent[i]] = i;
        }
        y = relabel(stage.presentation, from, z);
      } else {
        auto z = psi(*stage.kernel, y);
        std::vector<std::optional<vertex_type>> from(
            stage.kernel->realized_size());
        for (vertex_type i = 0; i < stage.presentation.size(); ++i) {
          from[i] = i;
        }
        y = relabel(stage.presentation, from, z);
      }
      current = &stage.presentation;
    }
    return y;
  }

}  // namespace gpc
