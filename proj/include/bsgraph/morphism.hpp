// Coloured-graph morphisms out of model graphs, and the lifting engine.
//
// A morphism lambda : E_w -> E is stored as total vertex and edge
// assignments over the model graph E_w. The lifting engine turns a path x
// into the unique C-compatible morphism traversed by x by propagating
// square completions: whenever one boundary of a square position is fully
// assigned, the collection determines the other boundary.

#ifndef BSGRAPH_MORPHISM_HPP_
#define BSGRAPH_MORPHISM_HPP_

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <limits>     // for numeric_limits
#include <memory>     // for shared_ptr, make_shared
#include <optional>   // for optional
#include <span>       // for span
#include <stdexcept>  // for logic_error
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "bsgraph/error.hpp"
#include "bsgraph/graph.hpp"
#include "bsgraph/model.hpp"
#include "bsgraph/monoid.hpp"
#include "bsgraph/squares.hpp"

namespace bsgraph {

  template <typename M>
  class Morphism {
   public:
    using Degree = typename M::Degree;
    using Model  = ModelGraph<M>;

    Morphism(std::shared_ptr<Model const> domain, std::vector<VertexId> vmap,
             std::vector<EdgeId> emap)
        : domain_(std::move(domain)), vmap_(std::move(vmap)), emap_(std::move(emap)) {
      if (vmap_.size() != domain_->vertex_count()
          || emap_.size() != domain_->edge_count()) {
        throw std::logic_error("morphism maps do not cover the domain");
      }
    }

    Degree const& degree() const noexcept {
      return domain_->degree();
    }
    Model const& domain() const noexcept {
      return *domain_;
    }
    std::shared_ptr<Model const> const& domain_ptr() const noexcept {
      return domain_;
    }

    // r(lambda) = lambda(e), s(lambda) = lambda(w).
    VertexId range() const {
      return vmap_.front();
    }
    VertexId source() const {
      return vmap_[domain_->source_index()];
    }

    VertexId at(Degree const& z) const {
      auto i = domain_->vertex_index(z);
      if (!i) {
        raise(ErrorKind::not_a_prefix,
              M::format(z) + " is not in the domain " + M::format(degree()));
      }
      return vmap_[*i];
    }

    EdgeId at(Degree const& z, Letter l) const {
      auto e = domain_->edge_index(z, l);
      if (!e) {
        raise(ErrorKind::not_a_prefix,
              "edge (" + M::format(z) + ", " + to_char(l) + ") is not in the domain "
                  + M::format(degree()));
      }
      return emap_[*e];
    }

    std::span<VertexId const> vertex_images() const noexcept {
      return vmap_;
    }
    std::span<EdgeId const> edge_images() const noexcept {
      return emap_;
    }

    // Map equality; domains compare by degree.
    friend bool operator==(Morphism const& x, Morphism const& y) {
      return x.degree() == y.degree() && x.vmap_ == y.vmap_ && x.emap_ == y.emap_;
    }

   private:
    std::shared_ptr<Model const> domain_;
    std::vector<VertexId>        vmap_;
    std::vector<EdgeId>          emap_;
  };

  using BsMorphism   = Morphism<BsMonoid>;
  using GridMorphism = Morphism<GridMonoid>;

  // Colour and structure preservation. Throws colour_mismatch or
  // junction_mismatch.
  template <typename M>
  void check_morphism(ColouredGraph const& g, Morphism<M> const& lambda) {
    auto const& dom = lambda.domain();
    for (VertexId v : lambda.vertex_images()) {
      if (!g.contains(v)) {
        raise(ErrorKind::unknown_vertex, "#" + std::to_string(v.index));
      }
    }
    for (std::size_t i = 0; i < dom.edge_count(); ++i) {
      auto const& e     = dom.edge(i);
      EdgeId      image = lambda.edge_images()[i];
      std::string where
          = "(" + M::format(dom.vertex(e.base)) + ", " + to_char(e.letter) + ")";
      if (g.colour(image) != e.letter) {
        raise(ErrorKind::colour_mismatch, g.name(image) + " at " + where);
      }
      if (g.range(image) != lambda.vertex_images()[e.base]
          || g.source(image) != lambda.vertex_images()[e.target]) {
        raise(ErrorKind::junction_mismatch,
              g.name(image) + " at " + where + " does not match its endpoints");
      }
    }
  }

  // Validating constructor.
  template <typename M>
  Morphism<M> make_morphism(ColouredGraph const& g, typename M::Degree const& w,
                            std::vector<VertexId> vmap, std::vector<EdgeId> emap) {
    Morphism<M> lambda(std::make_shared<ModelGraph<M> const>(w), std::move(vmap),
                       std::move(emap));
    check_morphism(g, lambda);
    return lambda;
  }

  // lambda_v : E_e -> E.
  template <typename M>
  Morphism<M> identity_morphism(ColouredGraph const& g, VertexId v) {
    if (!g.contains(v)) {
      raise(ErrorKind::unknown_vertex, "#" + std::to_string(v.index));
    }
    return Morphism<M>(std::make_shared<ModelGraph<M> const>(M::identity()), {v}, {});
  }

  template <typename M>
  typename M::Degree path_degree(Path const& x) {
    auto d = M::identity();
    for (Letter l : x.colours()) {
      d = M::extend(d, l);
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Square completion engine
  ////////////////////////////////////////////////////////////////////////

  // Partial assignment over a model graph, closed under square completion.
  template <typename M>
  class Completion {
   public:
    using Model = ModelGraph<M>;

    Completion(ColouredGraph const& g, SquareCollection const& collection,
               std::shared_ptr<Model const> model)
        : g_(g), collection_(collection), model_(std::move(model)),
          vmap_(model_->vertex_count()), emap_(model_->edge_count()),
          queued_(model_->square_positions().size(), false) {}

    Model const& model() const noexcept {
      return *model_;
    }

    std::optional<VertexId> const& vertex(std::size_t i) const {
      return vmap_.at(i);
    }
    std::optional<EdgeId> const& edge(std::size_t i) const {
      return emap_.at(i);
    }

    void assign_vertex(std::size_t i, VertexId v) {
      auto& slot = vmap_.at(i);
      if (slot && *slot != v) {
        raise(ErrorKind::conflict, "vertex " + M::format(model_->vertex(i))
                                       + " forced to both " + g_.name(*slot)
                                       + " and " + g_.name(v));
      }
      slot = v;
    }

    void assign_edge(std::size_t i, EdgeId id) {
      auto const& e    = model_->edge(i);
      auto&       slot = emap_.at(i);
      if (slot) {
        if (*slot != id) {
          raise(ErrorKind::conflict, "edge " + describe(i) + " forced to both "
                                         + g_.name(*slot) + " and " + g_.name(id));
        }
        return;
      }
      if (g_.colour(id) != e.letter) {
        raise(ErrorKind::colour_mismatch, g_.name(id) + " at " + describe(i));
      }
      slot = id;
      assign_vertex(e.base, g_.range(id));
      assign_vertex(e.target, g_.source(id));
      for (std::size_t p : model_->positions_of_edge(i)) {
        if (!queued_[p]) {
          queued_[p] = true;
          work_.push_back(p);
        }
      }
    }

    // Runs square completion to a fixpoint. Throws not_covered when a
    // boundary has no square, conflict when two completions disagree.
    void propagate() {
      while (!work_.empty()) {
        std::size_t p = work_.back();
        work_.pop_back();
        queued_[p]     = false;
        auto const& pos = model_->square_positions()[p];
        auto        red = images(pos.red_first);
        if (red) {
          Square const& sq = collection_.lookup_red(g_, *red);
          fill(pos.blue_first, sq.blue_first);
          continue;
        }
        auto blue = images(pos.blue_first);
        if (blue) {
          Square const& sq = collection_.lookup_blue(g_, *blue);
          fill(pos.red_first, sq.red_first);
        }
      }
    }

    // Everything in E_w, w <= degree, is assigned.
    bool covers(typename M::Degree const& w) const {
      for (std::size_t i = 0; i < model_->vertex_count(); ++i) {
        if (M::is_prefix(model_->vertex(i), w) && !vmap_[i]) {
          return false;
        }
      }
      for (std::size_t i = 0; i < model_->edge_count(); ++i) {
        auto const& e = model_->edge(i);
        if (M::is_prefix(model_->vertex(e.target), w) && !emap_[i]) {
          return false;
        }
      }
      return true;
    }

    Morphism<M> finish() const {
      std::vector<VertexId> vmap;
      std::vector<EdgeId>   emap;
      vmap.reserve(vmap_.size());
      emap.reserve(emap_.size());
      for (auto const& v : vmap_) {
        if (!v) {
          throw std::logic_error("square completion left a vertex unassigned");
        }
        vmap.push_back(*v);
      }
      for (auto const& e : emap_) {
        if (!e) {
          throw std::logic_error("square completion left an edge unassigned");
        }
        emap.push_back(*e);
      }
      return Morphism<M>(model_, std::move(vmap), std::move(emap));
    }

   private:
    std::string describe(std::size_t i) const {
      auto const& e = model_->edge(i);
      return "(" + M::format(model_->vertex(e.base)) + ", " + to_char(e.letter) + ")";
    }

    std::optional<std::vector<EdgeId>> images(std::vector<std::size_t> const& edges) const {
      std::vector<EdgeId> result;
      result.reserve(edges.size());
      for (std::size_t e : edges) {
        if (!emap_[e]) {
          return std::nullopt;
        }
        result.push_back(*emap_[e]);
      }
      return result;
    }

    void fill(std::vector<std::size_t> const& edges, std::vector<EdgeId> const& ids) {
      for (std::size_t k = 0; k < edges.size(); ++k) {
        assign_edge(edges[k], ids[k]);
      }
    }

    ColouredGraph const&                 g_;
    SquareCollection const&              collection_;
    std::shared_ptr<Model const>         model_;
    std::vector<std::optional<VertexId>> vmap_;
    std::vector<std::optional<EdgeId>>   emap_;
    std::vector<bool>                    queued_;
    std::vector<std::size_t>             work_;
  };

  struct LiftOptions {
    std::size_t vertex_limit = kDefaultVertexLimit;
    // Assert after every edge that the morphism is total on E_{d(prefix)}.
    bool check_invariant = false;
  };

  // The unique C-compatible morphism traversed by x. The collection is
  // trusted; an incomplete one surfaces as not_covered (or conflict).
  template <typename M>
  Morphism<M> lift_path(ColouredGraph const& g, SquareCollection const& collection,
                        Path const& x, LiftOptions const& options = {}) {
    auto degree = path_degree<M>(x);
    auto domain = std::make_shared<ModelGraph<M> const>(degree, options.vertex_limit);
    Completion<M> state(g, collection, domain);
    state.assign_vertex(0, x.range());

    auto running = M::identity();
    for (std::size_t i = 0; i < x.size(); ++i) {
      EdgeId      f    = x.edges()[i];
      Letter      l    = x.colours()[i];
      std::size_t base = *domain->vertex_index(running);
      auto const& at   = state.vertex(base);
      if (at && *at != g.range(f)) {
        raise(ErrorKind::not_composable,
              "edge " + g.name(f) + " does not start at " + g.name(*at), i);
      }
      state.assign_edge(domain->out_edge(base, l), f);
      state.propagate();
      running = M::extend(running, l);
      if (options.check_invariant && !state.covers(running)) {
        throw std::logic_error("lift is not total on the model graph of "
                               + M::format(running));
      }
    }
    return state.finish();
  }

  inline BsMorphism lift_path_bs(ColouredGraph const& g, SquareCollection const& c,
                                 Path const& x, LiftOptions const& options = {}) {
    return lift_path<BsMonoid>(g, c, x, options);
  }

  inline GridMorphism lift_path_grid(ColouredGraph const& g, SquareCollection const& c,
                                     Path const& x, LiftOptions const& options = {}) {
    return lift_path<GridMonoid>(g, c, x, options);
  }

  // Composition by seeding both factors into E_{d(mu) d(nu)} and running
  // square completion, without going through a traversal.
  template <typename M>
  Morphism<M> compose_stitched(ColouredGraph const& g, SquareCollection const& collection,
                               Morphism<M> const& mu, Morphism<M> const& nu,
                               std::size_t vertex_limit = kDefaultVertexLimit) {
    if (mu.source() != nu.range()) {
      raise(ErrorKind::not_composable,
            "s(mu) = " + g.name(mu.source()) + " but r(nu) = " + g.name(nu.range()));
    }
    auto degree = M::mul(mu.degree(), nu.degree());
    auto domain = std::make_shared<ModelGraph<M> const>(degree, vertex_limit);
    Completion<M> state(g, collection, domain);
    auto          seed = [&](Morphism<M> const& part, auto const& shift) {
      auto const& dom = part.domain();
      for (std::size_t i = 0; i < dom.vertex_count(); ++i) {
        state.assign_vertex(*domain->vertex_index(shift(dom.vertex(i))),
                            part.vertex_images()[i]);
      }
      for (std::size_t i = 0; i < dom.edge_count(); ++i) {
        auto const& e = dom.edge(i);
        state.assign_edge(*domain->edge_index(shift(dom.vertex(e.base)), e.letter),
                          part.edge_images()[i]);
      }
    };
    seed(mu, [](auto const& z) { return z; });
    seed(nu, [&](auto const& z) { return M::mul(mu.degree(), z); });
    state.propagate();
    return state.finish();
  }

  ////////////////////////////////////////////////////////////////////////
  // Traversals
  ////////////////////////////////////////////////////////////////////////

  template <typename M>
  bool check_traverses(Morphism<M> const& lambda, Path const& x) {
    if (x.is_vertex()) {
      return lambda.degree() == M::identity() && lambda.range() == x.range();
    }
    if (path_degree<M>(x) != lambda.degree()) {
      return false;
    }
    auto running = M::identity();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (lambda.at(running, x.colours()[i]) != x.edges()[i]) {
        return false;
      }
      running = M::extend(running, x.colours()[i]);
    }
    return true;
  }

  // Reads lambda's edge images along a letter string of degree d(lambda).
  template <typename M>
  Path traversal_along(ColouredGraph const& g, Morphism<M> const& lambda,
                       std::span<Letter const> letters) {
    if (letters.empty()) {
      return vertex_path(g, lambda.range());
    }
    std::vector<EdgeId> ids;
    auto                running = M::identity();
    for (Letter l : letters) {
      ids.push_back(lambda.at(running, l));
      running = M::extend(running, l);
    }
    if (running != lambda.degree()) {
      raise(ErrorKind::degree_mismatch, "letter string has degree " + M::format(running)
                                            + ", morphism has " + M::format(lambda.degree()));
    }
    return validate_path(g, ids);
  }

  template <typename M>
  Path shortest_traversal(ColouredGraph const& g, Morphism<M> const& lambda) {
    return traversal_along(g, lambda, M::shortest_form(lambda.degree()));
  }

  template <typename M>
  Path longest_traversal(ColouredGraph const& g, Morphism<M> const& lambda) {
    return traversal_along(g, lambda, M::longest_form(lambda.degree()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Restrictions
  ////////////////////////////////////////////////////////////////////////

  // lambda|*_{[w1,w2]} on E_{w1^-1 w2}: z -> lambda(w1 z).
  template <typename M>
  Morphism<M> restrict_shifted(Morphism<M> const& lambda, typename M::Degree const& w1,
                               typename M::Degree const& w2) {
    if (!M::is_prefix(w2, lambda.degree())) {
      raise(ErrorKind::not_a_prefix,
            M::format(w2) + " is not a prefix of " + M::format(lambda.degree()));
    }
    auto relative = M::left_quotient(w1, w2);
    if (w1 == M::identity() && relative == lambda.degree()) {
      return lambda;
    }
    auto domain = std::make_shared<ModelGraph<M> const>(relative);
    std::vector<VertexId> vmap;
    std::vector<EdgeId>   emap;
    vmap.reserve(domain->vertex_count());
    emap.reserve(domain->edge_count());
    for (auto const& z : domain->vertices()) {
      vmap.push_back(lambda.at(M::mul(w1, z)));
    }
    for (auto const& e : domain->edges()) {
      emap.push_back(lambda.at(M::mul(w1, domain->vertex(e.base)), e.letter));
    }
    return Morphism<M>(std::move(domain), std::move(vmap), std::move(emap));
  }

  // lambda restricted to E_{w1} (values unchanged).
  template <typename M>
  Morphism<M> restrict(Morphism<M> const& lambda, typename M::Degree const& w1) {
    return restrict_shifted(lambda, M::identity(), w1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Occurrences and compatibility
  ////////////////////////////////////////////////////////////////////////

  // The square of lambda at position m: z -> lambda(m z) on the model
  // square.
  template <typename M>
  struct Occurrence {
    typename M::Degree  position;
    std::vector<EdgeId> red_first;
    std::vector<EdgeId> blue_first;

    Square as_square() const {
      return Square{"@" + M::format(position), M::mode, red_first, blue_first};
    }
  };

  template <typename M>
  std::vector<Occurrence<M>> occurrences(Morphism<M> const& lambda) {
    std::vector<Occurrence<M>> result;
    auto const&                dom = lambda.domain();
    for (auto const& pos : dom.square_positions()) {
      Occurrence<M> occ{dom.vertex(pos.base), {}, {}};
      for (std::size_t e : pos.red_first) {
        occ.red_first.push_back(lambda.edge_images()[e]);
      }
      for (std::size_t e : pos.blue_first) {
        occ.blue_first.push_back(lambda.edge_images()[e]);
      }
      result.push_back(std::move(occ));
    }
    return result;
  }

  template <typename M>
  bool check_compatible(Morphism<M> const& lambda, SquareCollection const& collection) {
    for (auto const& occ : occurrences(lambda)) {
      if (!collection.contains_edges(occ.as_square())) {
        return false;
      }
    }
    return true;
  }

  // The square phi viewed as a morphism on the model square.
  template <typename M>
  Morphism<M> square_morphism(ColouredGraph const& g, Square const& sq) {
    validate_square(g, sq);
    auto domain = std::make_shared<ModelGraph<M> const>(M::square_degree());
    auto const& pos = domain->square_positions().front();
    std::vector<VertexId> vmap(domain->vertex_count());
    std::vector<EdgeId>   emap(domain->edge_count());
    auto place = [&](std::vector<std::size_t> const& slots, std::vector<EdgeId> const& ids) {
      for (std::size_t k = 0; k < slots.size(); ++k) {
        auto const& e = domain->edge(slots[k]);
        emap[slots[k]] = ids[k];
        vmap[e.base]   = g.range(ids[k]);
        vmap[e.target] = g.source(ids[k]);
      }
    };
    place(pos.red_first, sq.red_first);
    place(pos.blue_first, sq.blue_first);
    Morphism<M> result(domain, std::move(vmap), std::move(emap));
    check_morphism(g, result);
    return result;
  }

  // Replaces a final blue-red pair of a traversal by the red-blue-blue
  // edges of lambda at the same square position.
  Path rewrite_tail(ColouredGraph const& g, BsMorphism const& lambda, Path const& z);

  ////////////////////////////////////////////////////////////////////////
  // Brute-force enumeration
  ////////////////////////////////////////////////////////////////////////

  struct EnumerateOptions {
    std::size_t vertex_limit = kDefaultVertexLimit;
    std::size_t max_results  = std::numeric_limits<std::size_t>::max();
  };

  // Every C-compatible morphism E_w -> E, by backtracking over the model
  // edges in domain order. Exponential; an oracle for small cases.
  template <typename M>
  std::vector<Morphism<M>> enumerate_morphisms(ColouredGraph const&      g,
                                               SquareCollection const&   collection,
                                               typename M::Degree const& w,
                                               EnumerateOptions const&   options = {}) {
    auto domain = std::make_shared<ModelGraph<M> const>(w, options.vertex_limit);
    auto const& dom = *domain;

    // Positions whose last edge (in domain order) is e.
    std::vector<std::vector<std::size_t>> closes(dom.edge_count());
    for (std::size_t p = 0; p < dom.square_positions().size(); ++p) {
      auto const& pos  = dom.square_positions()[p];
      std::size_t last = 0;
      for (auto const* side : {&pos.red_first, &pos.blue_first}) {
        for (std::size_t e : *side) {
          last = std::max(last, e);
        }
      }
      closes[last].push_back(p);
    }

    std::vector<Morphism<M>>             result;
    std::vector<std::optional<VertexId>> vmap(dom.vertex_count());
    std::vector<EdgeId>                  emap(dom.edge_count());

    auto compatible_at = [&](std::size_t p) {
      auto const& pos = dom.square_positions()[p];
      Square      sq{"", M::mode, {}, {}};
      for (std::size_t e : pos.red_first) {
        sq.red_first.push_back(emap[e]);
      }
      for (std::size_t e : pos.blue_first) {
        sq.blue_first.push_back(emap[e]);
      }
      return collection.contains_edges(sq);
    };

    auto search = [&](auto& self, std::size_t i) -> void {
      if (result.size() >= options.max_results) {
        return;
      }
      if (i == dom.edge_count()) {
        std::vector<VertexId> vs;
        for (auto const& v : vmap) {
          vs.push_back(*v);
        }
        result.emplace_back(domain, std::move(vs), emap);
        return;
      }
      auto const& e = dom.edge(i);
      for (EdgeId candidate : g.edges_into(*vmap[e.base])) {
        if (g.colour(candidate) != e.letter) {
          continue;
        }
        bool fresh = !vmap[e.target];
        if (!fresh && *vmap[e.target] != g.source(candidate)) {
          continue;
        }
        if (fresh) {
          vmap[e.target] = g.source(candidate);
        }
        emap[i] = candidate;
        bool ok = true;
        for (std::size_t p : closes[i]) {
          if (!compatible_at(p)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          self(self, i + 1);
        }
        if (fresh) {
          vmap[e.target].reset();
        }
      }
    };

    for (VertexId v : g.vertices()) {
      vmap.assign(dom.vertex_count(), std::nullopt);
      vmap[0] = v;
      search(search, 0);
    }
    return result;
  }

}  // namespace bsgraph

#endif  // BSGRAPH_MORPHISM_HPP_
