#include "bsgraph/error.hpp"
#include "bsgraph/squares.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bsgraph;

TEST_SUITE("squares") {
  TEST_CASE("phi1 and phi2 are valid squares") {
    auto g  = support::graph_E();
    auto p1 = support::phi1(g);
    auto p2 = support::phi2(g);
    CHECK(p1.red_first.size() == 3);
    CHECK(p1.blue_first.size() == 2);
    CHECK(g.name(p2.blue_first[0]) == "k");
    CHECK(g.name(p2.blue_first[1]) == "h");
  }

  TEST_CASE("malformed squares") {
    auto g = support::graph_E();
    auto e = [&g](char const* n) { return g.edge_named(n); };
    try {
      build_square(g, "bad", BsSquareEdges{e("g"), e("k"), e("k"), e("g"), e("f")});
      FAIL("accepted");
    } catch (Error const& err) {
      CHECK(err.kind() == ErrorKind::colour_mismatch);
    }
    try {
      build_square(g, "bad", BsSquareEdges{e("f"), e("g"), e("g"), e("g"), e("f")});
      FAIL("accepted");
    } catch (Error const& err) {
      CHECK(err.kind() == ErrorKind::junction_mismatch);
      CHECK(std::string(err.what()).find("s(eA) = r(aB)") != std::string::npos);
    }
  }

  TEST_CASE("completeness of fixture E") {
    auto g      = support::graph_E();
    auto report = check_complete(g, support::squares_E(g));
    CHECK(report.complete());
    CHECK(report.square_count == 2);
    CHECK(report.red_first_paths == 2);
    CHECK(report.blue_first_paths == 2);
  }

  TEST_CASE("missing phi2") {
    auto g      = support::graph_E();
    auto report = check_complete(g, support::squares_E_without_phi2(g));
    CHECK_FALSE(report.complete());
    REQUIRE(report.uncovered_red.size() == 1);
    REQUIRE(report.uncovered_blue.size() == 1);
    CHECK(to_string(g, report.uncovered_red[0]) == "h g g");
    CHECK(to_string(g, report.uncovered_blue[0]) == "k h");
  }

  TEST_CASE("duplicated boundary") {
    auto g       = support::graph_E();
    auto renamed = support::phi1(g);
    renamed.name = "phi1_copy";
    SquareCollection c(Mode::bs, {support::phi1(g), support::phi2(g), renamed});
    auto             report = check_complete(g, c);
    CHECK_FALSE(report.complete());
    CHECK(report.duplicated.size() == 2);
    CHECK(report.uncovered_red.empty());
  }

  TEST_CASE("reordering and renaming do not matter") {
    auto g  = support::graph_E();
    auto p1 = support::phi1(g);
    auto p2 = support::phi2(g);
    p1.name = "x";
    p2.name = "y";
    CHECK(check_complete(g, SquareCollection(Mode::bs, {p2, p1})).complete());
  }

  TEST_CASE("lookups") {
    auto g = support::graph_E();
    auto c = support::squares_E(g);
    auto e = [&g](char const* n) { return g.edge_named(n); };
    std::vector<EdgeId> fkk{e("f"), e("k"), e("k")};
    std::vector<EdgeId> kh{e("k"), e("h")};
    CHECK(c.lookup_red(g, fkk).name == "phi1");
    CHECK(c.lookup_blue(g, kh).name == "phi2");
    for (auto const& sq : c.squares()) {
      CHECK(c.lookup_red(g, sq.red_first).same_edges(sq));
      CHECK(c.lookup_blue(g, sq.blue_first).same_edges(sq));
    }
    auto only = support::squares_E_without_phi2(g);
    try {
      only.lookup_blue(g, kh);
      FAIL("covered");
    } catch (Error const& err) {
      CHECK(err.kind() == ErrorKind::not_covered);
      CHECK(std::string(err.what()).find("k h") != std::string::npos);
    }
  }

  TEST_CASE("grid squares") {
    auto g = support::graph_single();
    auto c = support::squares_single(g);
    auto r = check_complete(g, c);
    CHECK(r.complete());
    CHECK(r.red_first_paths == 1);
    CHECK(r.blue_first_paths == 1);
    CHECK(check_complete(g, SquareCollection(Mode::grid, {})).uncovered_red.size() == 1);
  }

  TEST_CASE("square count equals boundary path counts when complete") {
    auto g = support::graph_E();
    auto r = check_complete(g, support::squares_E(g));
    CHECK(r.square_count == r.red_first_paths);
    CHECK(r.square_count == r.blue_first_paths);
  }
}
