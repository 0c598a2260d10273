// Line-oriented fixture files describing a 2-coloured graph and a
// collection of squares.
//
//   # comment
//   mode bs|grid
//   vertex <name>
//   edge <name> <colour> <range> <source>
//   square <name> eA=<edge> aB=<edge> abB=<edge> eB=<edge> bA=<edge>
//   square <name> v1=<edge> e1v2=<edge> v2=<edge> e2v1=<edge>
//
// The mode line is optional (default bs) but must precede any square.

#ifndef BSGRAPH_FIXTURE_HPP_
#define BSGRAPH_FIXTURE_HPP_

#include <filesystem>   // for path
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "bsgraph/graph.hpp"
#include "bsgraph/monoid.hpp"
#include "bsgraph/squares.hpp"

namespace bsgraph {

  struct SquareDecl {
    std::string                                      name;
    std::vector<std::pair<std::string, std::string>> slots;  // slot = edge
  };

  struct Fixture {
    Mode                     mode          = Mode::bs;
    bool                     explicit_mode = false;
    std::vector<std::string> vertices;
    std::vector<EdgeDecl>    edges;
    std::vector<SquareDecl>  squares;

    ColouredGraph    graph;
    SquareCollection collection;
  };

  // Errors carry the 1-based line number in index().
  Fixture parse_fixture(std::string_view text);
  Fixture load_fixture(std::filesystem::path const& file);

  // Canonical text: mode line, vertices, edges, squares with slots in
  // canonical order, single spaces, no comments.
  std::string serialize(Fixture const& fixture);

  // Fixture text for a graph and collection built in code.
  std::string serialize(ColouredGraph const& g, SquareCollection const& collection);

}  // namespace bsgraph

#endif  // BSGRAPH_FIXTURE_HPP_
