// Model graphs: the coloured graphs E_w (vertices are the prefixes of w,
// edges are single-letter extensions (z, z l)) and the grid rectangles
// E_{2,m}. They are the domains of every morphism in the library.

#ifndef BSGRAPH_MODEL_HPP_
#define BSGRAPH_MODEL_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <stdexcept> // for logic_error
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "bsgraph/error.hpp"
#include "bsgraph/monoid.hpp"
#include "bsgraph/word.hpp"

namespace bsgraph {

  template <typename M>
  class ModelGraph {
   public:
    using Degree = typename M::Degree;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Edge (base, base * letter): r = base, s = target.
    struct Edge {
      std::size_t base;
      Letter      letter;
      std::size_t target;
    };

    // A vertex m with m * square_degree() <= top, together with the model
    // edges of the translated square m * E_sq in boundary order.
    struct SquarePosition {
      std::size_t              base;
      std::vector<std::size_t> red_first;
      std::vector<std::size_t> blue_first;
    };

    explicit ModelGraph(Degree top, std::size_t vertex_limit = kDefaultVertexLimit)
        : top_(std::move(top)), layout_(top_, vertex_limit) {
      vertices_ = layout_.vertices();
      out_.assign(vertices_.size(), {npos, npos});
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (Letter l : {Letter::A, Letter::B}) {
          auto target = layout_.index(M::extend(vertices_[i], l));
          if (target) {
            out_[i][static_cast<std::size_t>(l)] = edges_.size();
            edges_.push_back({i, l, *target});
          }
        }
      }
      positions_of_edge_.resize(edges_.size());
      Degree sq = M::square_degree();
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!M::is_prefix(M::mul(vertices_[i], sq), top_)) {
          continue;
        }
        SquarePosition pos{i, walk(i, M::red_first), walk(i, M::blue_first)};
        std::size_t    id = positions_.size();
        for (auto const* side : {&pos.red_first, &pos.blue_first}) {
          for (std::size_t e : *side) {
            positions_of_edge_[e].push_back(id);
          }
        }
        positions_.push_back(std::move(pos));
      }
    }

    Degree const& degree() const noexcept {
      return top_;
    }

    std::size_t vertex_count() const noexcept {
      return vertices_.size();
    }
    std::size_t edge_count() const noexcept {
      return edges_.size();
    }

    Degree const& vertex(std::size_t i) const {
      return vertices_.at(i);
    }
    std::vector<Degree> const& vertices() const noexcept {
      return vertices_;
    }
    std::optional<std::size_t> vertex_index(Degree const& z) const {
      return layout_.index(z);
    }

    Edge const& edge(std::size_t i) const {
      return edges_.at(i);
    }
    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    // Index of the edge (z, z l) where z is vertex `base`, or npos.
    std::size_t out_edge(std::size_t base, Letter l) const {
      return out_.at(base)[static_cast<std::size_t>(l)];
    }
    std::optional<std::size_t> edge_index(Degree const& z, Letter l) const {
      auto base = layout_.index(z);
      if (!base || out_edge(*base, l) == npos) {
        return std::nullopt;
      }
      return out_edge(*base, l);
    }

    std::vector<SquarePosition> const& square_positions() const noexcept {
      return positions_;
    }
    std::vector<std::size_t> const& positions_of_edge(std::size_t e) const {
      return positions_of_edge_.at(e);
    }

    std::size_t source_index() const {
      return *layout_.index(top_);
    }

   private:
    template <typename Word>
    std::vector<std::size_t> walk(std::size_t start, Word const& word) const {
      std::vector<std::size_t> result;
      std::size_t              at = start;
      for (Letter l : word) {
        std::size_t e = out_edge(at, l);
        if (e == npos) {
          // Prefix closure guarantees the whole square is present.
          throw std::logic_error("model graph is not prefix closed at "
                                 + M::format(vertices_[start]));
        }
        result.push_back(e);
        at = edges_[e].target;
      }
      return result;
    }

    Degree                                  top_;
    typename M::Layout                      layout_;
    std::vector<Degree>                     vertices_;
    std::vector<Edge>                       edges_;
    std::vector<std::array<std::size_t, 2>> out_;
    std::vector<SquarePosition>             positions_;
    std::vector<std::vector<std::size_t>>   positions_of_edge_;
  };

  using BsModelGraph   = ModelGraph<BsMonoid>;
  using GridModelGraph = ModelGraph<GridMonoid>;

  // The subgraph of E_top on {z : base <= z <= top}, stored as its
  // translate E_{base^-1 top}; vertex i of `shape` is base * shape.vertex(i).
  template <typename M>
  struct IntervalGraph {
    using Degree = typename M::Degree;

    Degree        base;
    Degree        top;
    ModelGraph<M> shape;

    Degree absolute(std::size_t i) const {
      return M::mul(base, shape.vertex(i));
    }

    bool contains(Degree const& z) const {
      return M::is_prefix(base, z) && M::is_prefix(z, top);
    }
  };

  template <typename M>
  ModelGraph<M> model(typename M::Degree const& w,
                      std::size_t vertex_limit = kDefaultVertexLimit) {
    return ModelGraph<M>(w, vertex_limit);
  }

  // Throws not_a_prefix unless base <= top.
  template <typename M>
  IntervalGraph<M> model_interval(typename M::Degree const& base,
                                  typename M::Degree const& top,
                                  std::size_t vertex_limit = kDefaultVertexLimit) {
    auto relative = M::left_quotient(base, top);
    return IntervalGraph<M>{base, top, ModelGraph<M>(relative, vertex_limit)};
  }

  inline BsModelGraph model_bs(BsWord const& w,
                               std::size_t   vertex_limit = kDefaultVertexLimit) {
    return BsModelGraph(w, vertex_limit);
  }

  inline IntervalGraph<BsMonoid> model_interval_bs(BsWord const& w1,
                                                   BsWord const& w2) {
    return model_interval<BsMonoid>(w1, w2);
  }

  inline GridModelGraph model_grid(GridDegree m,
                                   std::size_t vertex_limit = kDefaultVertexLimit) {
    return GridModelGraph(m, vertex_limit);
  }

  inline IntervalGraph<GridMonoid> model_interval_grid(GridDegree p, GridDegree q) {
    return model_interval<GridMonoid>(p, q);
  }

}  // namespace bsgraph

#endif  // BSGRAPH_MODEL_HPP_
