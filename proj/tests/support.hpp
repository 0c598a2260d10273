// Fixtures built in code, independent of the fixture parser.

#ifndef BSGRAPH_TESTS_SUPPORT_HPP_
#define BSGRAPH_TESTS_SUPPORT_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "bsgraph/graph.hpp"
#include "bsgraph/squares.hpp"

namespace support {

  using namespace bsgraph;

  // u, v; blue loops g at u and k at v; red f: u <- v and h: v <- u.
  inline ColouredGraph graph_E() {
    return build_graph({"u", "v"}, {{"g", "b", "u", "u"},
                                    {"k", "b", "v", "v"},
                                    {"f", "a", "u", "v"},
                                    {"h", "a", "v", "u"}});
  }

  inline Square phi1(ColouredGraph const& g) {
    return build_square(g, "phi1",
                        BsSquareEdges{g.edge_named("f"), g.edge_named("k"), g.edge_named("k"),
                                      g.edge_named("g"), g.edge_named("f")});
  }

  inline Square phi2(ColouredGraph const& g) {
    return build_square(g, "phi2",
                        BsSquareEdges{g.edge_named("h"), g.edge_named("g"), g.edge_named("g"),
                                      g.edge_named("k"), g.edge_named("h")});
  }

  inline SquareCollection squares_E(ColouredGraph const& g) {
    return SquareCollection(Mode::bs, {phi1(g), phi2(g)});
  }

  inline SquareCollection squares_E_without_phi2(ColouredGraph const& g) {
    return SquareCollection(Mode::bs, {phi1(g)});
  }

  // One vertex w, red loop rho, blue loop beta.
  inline ColouredGraph graph_single() {
    return build_graph({"w"}, {{"rho", "a", "w", "w"}, {"beta", "b", "w", "w"}});
  }

  inline SquareCollection squares_single(ColouredGraph const& g) {
    auto rho  = g.edge_named("rho");
    auto beta = g.edge_named("beta");
    return SquareCollection(Mode::grid,
                            {build_square(g, "sigma", GridSquareEdges{rho, beta, beta, rho})});
  }

  inline Path path(ColouredGraph const& g, std::string const& text) {
    return parse_path(g, text);
  }

  inline std::string fixture_dir() {
    return BSGRAPH_FIXTURE_DIR;
  }

}  // namespace support

#endif  // BSGRAPH_TESTS_SUPPORT_HPP_
