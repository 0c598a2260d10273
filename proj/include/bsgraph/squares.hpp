// Squares, complete collections and the two boundary indices used by the
// lifting engine.
//
// A square is a coloured-graph morphism from the model square (E_{ba} in
// BS mode, E_{2,(1,1)} in grid mode) into a graph. Only its edge images are
// stored, split into the red-first boundary (colour word a b b, resp.
// c1 c2) and the blue-first boundary (b a, resp. c2 c1). The two boundaries
// share their range and their source.

#ifndef BSGRAPH_SQUARES_HPP_
#define BSGRAPH_SQUARES_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <span>     // for span
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "bsgraph/graph.hpp"
#include "bsgraph/monoid.hpp"

namespace bsgraph {

  // eA = phi(e,a), aB = phi(a,ab), abB = phi(ab,ab^2), eB = phi(e,b),
  // bA = phi(b,ba).
  struct BsSquareEdges {
    EdgeId eA, aB, abB, eB, bA;
  };

  // v1 = phi(v_1), e1v2 = phi(e_1 + v_2), v2 = phi(v_2), e2v1 = phi(e_2 + v_1).
  struct GridSquareEdges {
    EdgeId v1, e1v2, v2, e2v1;
  };

  struct Square {
    std::string         name;
    Mode                mode = Mode::bs;
    std::vector<EdgeId> red_first;
    std::vector<EdgeId> blue_first;

    // Edge images in fixture slot order (eA aB abB eB bA, resp.
    // v1 e1v2 v2 e2v1).
    std::vector<EdgeId> slots() const;

    // Same edge data; names are ignored.
    bool same_edges(Square const& other) const {
      return mode == other.mode && red_first == other.red_first
             && blue_first == other.blue_first;
    }
  };

  std::vector<std::string> const& slot_names(Mode mode);
  std::span<Letter const>         red_first_colours(Mode mode);
  std::span<Letter const>         blue_first_colours(Mode mode);

  // Throws unknown_edge, colour_mismatch, or junction_mismatch naming the
  // failing equation, e.g. "s(eA) = r(aB)".
  void validate_square(ColouredGraph const& g, Square const& sq);

  Square build_square(ColouredGraph const& g, std::string name,
                      BsSquareEdges const& edges);
  Square build_square(ColouredGraph const& g, std::string name,
                      GridSquareEdges const& edges);
  // `edges` in slot order.
  Square build_square(ColouredGraph const& g, Mode mode, std::string name,
                      std::span<EdgeId const> edges);

  class SquareCollection {
   public:
    SquareCollection() = default;
    SquareCollection(Mode mode, std::vector<Square> squares);

    Mode mode() const noexcept {
      return mode_;
    }
    std::vector<Square> const& squares() const noexcept {
      return squares_;
    }
    std::size_t size() const noexcept {
      return squares_.size();
    }

    // nullptr when no square has this boundary. When two squares share a
    // boundary the first one declared wins; check_complete reports it.
    Square const* find_red(std::span<EdgeId const> boundary) const;
    Square const* find_blue(std::span<EdgeId const> boundary) const;

    // Throw not_covered naming the boundary path.
    Square const& lookup_red(ColouredGraph const&    g,
                             std::span<EdgeId const> boundary) const;
    Square const& lookup_blue(ColouredGraph const&    g,
                              std::span<EdgeId const> boundary) const;

    // Linear scan; independent of the indices.
    bool contains_edges(Square const& sq) const;

   private:
    Mode                                       mode_ = Mode::bs;
    std::vector<Square>                        squares_;
    std::map<std::vector<EdgeId>, std::size_t> red_index_;
    std::map<std::vector<EdgeId>, std::size_t> blue_index_;
  };

  struct CompletenessReport {
    Mode              mode             = Mode::bs;
    std::size_t       square_count     = 0;
    std::size_t       red_first_paths  = 0;
    std::size_t       blue_first_paths = 0;
    std::vector<Path> uncovered_red;
    std::vector<Path> uncovered_blue;
    // "<boundary> shared by <sq1>, <sq2>, ..."
    std::vector<std::string> duplicated;
    // "<square>: <reason>"
    std::vector<std::string> malformed;

    bool complete() const noexcept {
      return uncovered_red.empty() && uncovered_blue.empty()
             && duplicated.empty() && malformed.empty();
    }
  };

  CompletenessReport check_complete(ColouredGraph const&    g,
                                    SquareCollection const& collection);

}  // namespace bsgraph

#endif  // BSGRAPH_SQUARES_HPP_
