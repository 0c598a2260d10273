// Finite 2-coloured directed graphs and their paths.
//
// Edges point from source to range: an edge f is drawn r(f) <- s(f), and a
// path x_1 x_2 ... x_n is composable when s(x_i) = r(x_{i+1}). Vertices and
// edges are numbered in declaration order, which fixes every iteration
// order in the library.

#ifndef BSGRAPH_GRAPH_HPP_
#define BSGRAPH_GRAPH_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <map>          // for map
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "bsgraph/word.hpp"

namespace bsgraph {

  struct VertexId {
    std::uint32_t index = 0;
    friend auto operator<=>(VertexId, VertexId) = default;
  };

  struct EdgeId {
    std::uint32_t index = 0;
    friend auto operator<=>(EdgeId, EdgeId) = default;
  };

  struct EdgeRecord {
    std::string name;
    VertexId    range;
    VertexId    source;
    Letter      colour;
  };

  // Edge declaration as it appears in a fixture file.
  struct EdgeDecl {
    std::string name;
    std::string colour;  // a, b, 1 or 2
    std::string range;
    std::string source;
  };

  // a and 1 are red (Letter::A); b and 2 are blue (Letter::B).
  Letter parse_colour(std::string_view token);

  class ColouredGraph {
   public:
    ColouredGraph() = default;

    std::size_t vertex_count() const noexcept {
      return vertex_names_.size();
    }
    std::size_t edge_count() const noexcept {
      return edges_.size();
    }

    std::string const& name(VertexId v) const;
    std::string const& name(EdgeId e) const;

    VertexId range(EdgeId e) const {
      return edge(e).range;
    }
    VertexId source(EdgeId e) const {
      return edge(e).source;
    }
    Letter colour(EdgeId e) const {
      return edge(e).colour;
    }
    EdgeRecord const& edge(EdgeId e) const;

    bool contains(VertexId v) const noexcept {
      return v.index < vertex_names_.size();
    }
    bool contains(EdgeId e) const noexcept {
      return e.index < edges_.size();
    }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;
    // Throwing lookups.
    VertexId vertex_named(std::string_view name) const;
    EdgeId   edge_named(std::string_view name) const;

    // Edges whose range is v, in declaration order.
    std::span<EdgeId const> edges_into(VertexId v) const;

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId>   edges() const;

    friend ColouredGraph build_graph(std::vector<std::string> const& vertices,
                                     std::vector<EdgeDecl> const&    edges);

   private:
    std::vector<std::string>                   vertex_names_;
    std::vector<EdgeRecord>                    edges_;
    std::map<std::string, VertexId, std::less<>> vertex_index_;
    std::map<std::string, EdgeId, std::less<>>   edge_index_;
    std::vector<std::vector<EdgeId>>           into_;
  };

  // Vertex and edge names share one namespace so that a bare name on the
  // command line is unambiguous. Throws duplicate_id, unknown_vertex or
  // bad_colour.
  ColouredGraph build_graph(std::vector<std::string> const& vertices,
                            std::vector<EdgeDecl> const&    edges);

  class Path {
   public:
    // Length-0 path at v.
    static Path at(VertexId v);

    VertexId range() const noexcept {
      return range_;
    }
    VertexId source() const noexcept {
      return source_;
    }
    std::size_t size() const noexcept {
      return edges_.size();
    }
    bool is_vertex() const noexcept {
      return edges_.empty();
    }
    std::span<EdgeId const> edges() const noexcept {
      return edges_;
    }
    std::span<Letter const> colours() const noexcept {
      return colours_;
    }

    friend bool operator==(Path const&, Path const&) = default;

    friend Path validate_path(ColouredGraph const&, std::span<EdgeId const>);

   private:
    Path() = default;

    VertexId            range_;
    VertexId            source_;
    std::vector<EdgeId> edges_;
    LetterString        colours_;
  };

  // Throws unknown_edge, or not_composable with index() = i for the first
  // junction where s(ids[i-1]) != r(ids[i]). ids must be non-empty.
  Path validate_path(ColouredGraph const& g, std::span<EdgeId const> ids);

  Path vertex_path(ColouredGraph const& g, VertexId v);

  Path concat(ColouredGraph const& g, Path const& x, Path const& y);

  // Space-separated edge names, or a single vertex name.
  Path        parse_path(ColouredGraph const& g, std::string_view text);
  std::string to_string(ColouredGraph const& g, Path const& p);

  BsWord     path_degree_bs(Path const& p);
  GridDegree path_degree_grid(Path const& p);

  // Every path whose colour word is `colours`, in lexicographic edge order.
  std::vector<Path> paths_with_colours(ColouredGraph const&    g,
                                       std::span<Letter const> colours);

  // Vertex paths, then paths of length 1, 2, ..., max_length.
  std::vector<Path> all_paths(ColouredGraph const& g, std::size_t max_length);

}  // namespace bsgraph

#endif  // BSGRAPH_GRAPH_HPP_
