#include <set>  // for set

#include "bsgraph/error.hpp"
#include "bsgraph/model.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsgraph;

TEST_SUITE("model-graphs") {
  TEST_CASE("E_ba") {
    auto m = model_bs(BsWord(1, 2));
    CHECK(m.vertex_count() == 5);
    CHECK(m.edge_count() == 5);
    std::size_t blue = 0;
    for (auto const& e : m.edges()) {
      blue += e.letter == Letter::B;
      CHECK(m.vertex(e.target) == extend(m.vertex(e.base), e.letter));
    }
    CHECK(blue == 3);
    CHECK(m.square_positions().size() == 1);
    CHECK(m.source_index() == 4);
  }

  TEST_CASE("E_e and E_(2,8)") {
    auto e = model_bs(BsWord());
    CHECK(e.vertex_count() == 1);
    CHECK(e.edge_count() == 0);
    CHECK(e.square_positions().empty());

    auto m = model_bs(BsWord(2, 8));
    CHECK(m.vertex_count() == 17);
    CHECK(m.edge_count() == 22);
    std::size_t blue = 0;
    for (auto const& e : m.edges()) {
      blue += e.letter == Letter::B;
    }
    CHECK(blue == 14);
    // Positions z with z * ba <= (2,8): two in row 0, four in row 1.
    CHECK(m.square_positions().size() == 6);
  }

  TEST_CASE("model graphs against brute-force prefix sets") {
    for (std::uint64_t n = 0; n <= 3; ++n) {
      for (std::uint64_t mb = 0; mb <= 12; ++mb) {
        BsWord w(n, mb);
        auto   m     = model_bs(w);
        auto   brute = oracle::prefix_forms(oracle::normal_string(n, mb));
        REQUIRE(m.vertex_count() == brute.size());
        std::size_t edges = 0;
        for (auto const& [zn, zm] : brute) {
          for (auto next : {std::pair{zn + 1, 2 * zm}, std::pair{zn, zm + 1}}) {
            edges += brute.count(next);
          }
        }
        CHECK(m.edge_count() == edges);
        std::size_t positions = 0;
        for (auto const& z : m.vertices()) {
          positions += is_prefix(mul(z, BsWord(1, 2)), w);
        }
        CHECK(m.square_positions().size() == positions);
        // Prefix closure: restriction to any prefix is the smaller model.
        for (auto const& w1 : m.vertices()) {
          auto sub = model_bs(w1);
          for (auto const& z : sub.vertices()) {
            CHECK(m.vertex_index(z).has_value());
          }
          std::size_t inside = 0;
          for (auto const& e : m.edges()) {
            inside += is_prefix(m.vertex(e.target), w1);
          }
          CHECK(inside == sub.edge_count());
        }
      }
    }
  }

  TEST_CASE("intervals") {
    auto i = model_interval_bs(BsWord(0, 2), BsWord(2, 8));
    CHECK(i.shape.vertex_count() == 3);
    CHECK(i.shape.edge_count() == 2);
    CHECK(i.absolute(0) == BsWord(0, 2));
    CHECK(i.absolute(1) == BsWord(1, 4));
    CHECK(i.absolute(2) == BsWord(2, 8));
    for (auto const& e : i.shape.edges()) {
      CHECK(e.letter == Letter::A);
    }

    auto same = model_interval_bs(BsWord(2, 8), BsWord(2, 8));
    CHECK(same.shape.vertex_count() == 1);
    CHECK(same.shape.edge_count() == 0);

    auto whole = model_interval_bs(BsWord(), BsWord(2, 8));
    CHECK(whole.shape.vertices() == model_bs(BsWord(2, 8)).vertices());

    CHECK_THROWS_AS(model_interval_bs(BsWord(0, 1), BsWord(2, 3)), Error);

    // Translation: the interval's vertices are exactly those of the parent
    // between the two ends.
    auto parent = model_bs(BsWord(2, 8));
    for (auto const& base : parent.vertices()) {
      auto        iv = model_interval_bs(base, BsWord(2, 8));
      std::size_t in = 0;
      for (auto const& z : parent.vertices()) {
        in += iv.contains(z);
      }
      CHECK(in == iv.shape.vertex_count());
      for (std::size_t k = 0; k < iv.shape.vertex_count(); ++k) {
        CHECK(iv.contains(iv.absolute(k)));
      }
    }
  }

  TEST_CASE("grid models") {
    auto sq = model_grid({1, 1});
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.edge_count() == 4);
    CHECK(sq.square_positions().size() == 1);
    auto pt = model_grid({0, 0});
    CHECK(pt.vertex_count() == 1);
    CHECK(pt.edge_count() == 0);
    auto r = model_grid({2, 1});
    CHECK(r.vertex_count() == 6);
    CHECK(r.edge_count() == 7);
    CHECK(r.square_positions().size() == 2);
    auto iv = model_interval_grid({1, 0}, {2, 1});
    CHECK(iv.shape.vertex_count() == 4);
    CHECK(iv.absolute(0) == GridDegree{1, 0});
    CHECK_THROWS_AS(model_interval_grid({2, 0}, {1, 1}), Error);
  }

  TEST_CASE("vertex limit") {
    CHECK_THROWS_AS(model_bs(BsWord(1, 100), 10), Error);
    try {
      model_bs(parse_word("b a^40"));
      FAIL("no limit");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::resource_limit);
    }
  }
}
