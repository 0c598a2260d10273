#include <map>  // for map

#include "bsgraph/error.hpp"
#include "bsgraph/morphism.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bsgraph;

namespace {
  // The morphism E_(2,8) -> E drawn for the path g g f h: rows n_a = 0, 1, 2
  // go to u, v, u; blue edges in those rows to g, k, g; red edges leaving
  // rows 0 and 1 to f and h.
  BsMorphism drawn_lambda(ColouredGraph const& g) {
    BsModelGraph          m(BsWord(2, 8));
    char const*           rows[]  = {"u", "v", "u"};
    char const*           blues[] = {"g", "k", "g"};
    char const*           reds[]  = {"f", "h"};
    std::vector<VertexId> vmap;
    std::vector<EdgeId>   emap;
    for (auto const& z : m.vertices()) {
      vmap.push_back(g.vertex_named(rows[z.n_a()]));
    }
    for (auto const& e : m.edges()) {
      auto row = m.vertex(e.base).n_a();
      emap.push_back(g.edge_named(e.letter == Letter::B ? blues[row] : reds[row]));
    }
    return make_morphism<BsMonoid>(g, BsWord(2, 8), vmap, emap);
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::syntax;
  }
}  // namespace

TEST_SUITE("morphisms") {
  TEST_CASE("lift of g g f h is the drawn morphism") {
    auto g      = support::graph_E();
    auto c      = support::squares_E(g);
    auto lambda = lift_path_bs(g, c, support::path(g, "g g f h"), {.check_invariant = true});
    CHECK(lambda.domain().vertex_count() == 17);
    CHECK(lambda.domain().edge_count() == 22);
    CHECK(lambda == drawn_lambda(g));
    CHECK(g.name(lambda.range()) == "u");
    CHECK(g.name(lambda.source()) == "u");
    CHECK(check_compatible(lambda, c));
    CHECK_FALSE(check_compatible(lambda, support::squares_E_without_phi2(g)));
  }

  TEST_CASE("occurrences of the drawn morphism") {
    auto g    = support::graph_E();
    auto occs = occurrences(drawn_lambda(g));
    REQUIRE(occs.size() == 6);
    for (auto const& occ : occs) {
      auto name = occ.position.n_a() == 0 ? "phi1" : "phi2";
      auto sq   = occ.position.n_a() == 0 ? support::phi1(g) : support::phi2(g);
      CHECK_MESSAGE(occ.as_square().same_edges(sq), name);
    }
    CHECK(occurrences(identity_morphism<BsMonoid>(g, g.vertex_named("v"))).empty());
  }

  TEST_CASE("traversals") {
    auto g      = support::graph_E();
    auto lambda = drawn_lambda(g);
    auto s      = shortest_traversal(g, lambda);
    auto l      = longest_traversal(g, lambda);
    CHECK(to_string(g, s) == "g g f h");
    CHECK(to_string(g, l) == "f h g g g g g g g g");
    CHECK(path_degree_bs(s) == BsWord(2, 8));
    CHECK(path_degree_bs(l) == BsWord(2, 8));
    CHECK(check_traverses(lambda, s));
    CHECK(check_traverses(lambda, l));
    CHECK_FALSE(check_traverses(lambda, support::path(g, "g g f")));

    auto lu = identity_morphism<BsMonoid>(g, g.vertex_named("u"));
    CHECK(check_traverses(lu, support::path(g, "u")));
    CHECK_FALSE(check_traverses(lu, support::path(g, "v")));
    CHECK(shortest_traversal(g, lu) == support::path(g, "u"));
    CHECK(longest_traversal(g, lu) == support::path(g, "u"));

    Letter const wrong[] = {Letter::A};
    CHECK(kind_of([&] { traversal_along(g, lambda, wrong); }) == ErrorKind::degree_mismatch);
  }

  TEST_CASE("lifts of single squares") {
    auto g   = support::graph_E();
    auto c   = support::squares_E(g);
    auto fkk = lift_path_bs(g, c, support::path(g, "f k k"));
    auto gf  = lift_path_bs(g, c, support::path(g, "g f"));
    CHECK(fkk == gf);
    CHECK(fkk == square_morphism<BsMonoid>(g, support::phi1(g)));
    auto occs = occurrences(fkk);
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].position == BsWord());

    auto lu = lift_path_bs(g, c, support::path(g, "u"));
    CHECK(lu == identity_morphism<BsMonoid>(g, g.vertex_named("u")));
  }

  TEST_CASE("rewrite_tail") {
    auto g   = support::graph_E();
    auto p1  = square_morphism<BsMonoid>(g, support::phi1(g));
    auto p2  = square_morphism<BsMonoid>(g, support::phi2(g));
    auto out = rewrite_tail(g, p1, support::path(g, "g f"));
    CHECK(to_string(g, out) == "f k k");
    CHECK(to_string(g, rewrite_tail(g, p2, support::path(g, "k h"))) == "h g g");
    CHECK(path_degree_bs(out) == BsWord(1, 2));
    CHECK(check_traverses(p1, out));
    CHECK(kind_of([&] { rewrite_tail(g, p1, support::path(g, "f k k")); })
          == ErrorKind::precondition_violated);
    CHECK(kind_of([&] { rewrite_tail(g, p2, support::path(g, "g f")); })
          == ErrorKind::precondition_violated);
    // A traversal of the drawn morphism along a b b b b a, ending at the
    // square position (1,3).
    auto lambda = drawn_lambda(g);
    auto z      = rewrite_tail(g, lambda, support::path(g, "f k k k k h"));
    CHECK(to_string(g, z) == "f k k k h g g");
    CHECK(check_traverses(lambda, z));
  }

  TEST_CASE("restrictions") {
    auto g      = support::graph_E();
    auto c      = support::squares_E(g);
    auto lambda = drawn_lambda(g);
    auto bottom = restrict(lambda, BsWord(0, 2));
    CHECK(bottom == lift_path_bs(g, c, support::path(g, "g g")));
    auto right = restrict_shifted(lambda, BsWord(0, 2), BsWord(2, 8));
    CHECK(right == lift_path_bs(g, c, support::path(g, "f h")));
    CHECK(restrict_shifted(lambda, BsWord(), BsWord(2, 8)) == lambda);
    CHECK(kind_of([&] { restrict(lambda, BsWord(3, 0)); }) == ErrorKind::not_a_prefix);
    for (auto const& w1 : lambda.domain().vertices()) {
      CHECK(check_compatible(restrict(lambda, w1), c));
      CHECK(check_compatible(restrict_shifted(lambda, w1, BsWord(2, 8)), c));
    }
  }

  TEST_CASE("lift errors") {
    auto g = support::graph_E();
    try {
      lift_path_bs(g, support::squares_E_without_phi2(g), support::path(g, "g g f h"));
      FAIL("lifted");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::not_covered);
      CHECK(std::string(e.what()).find("k h") != std::string::npos);
    }
    auto bad = build_graph({"u"}, {{"g", "b", "u", "u"}, {"f", "a", "u", "u"}});
    CHECK(kind_of([&] {
            lift_path_bs(bad, SquareCollection(Mode::bs, {}), support::path(bad, "g f"));
          })
          == ErrorKind::not_covered);
  }

  TEST_CASE("disagreeing completions raise Conflict") {
    auto g     = support::graph_E();
    auto c     = support::squares_E(g);
    auto model = std::make_shared<BsModelGraph const>(BsWord(1, 2));
    Completion<BsMonoid> state(g, c, model);
    state.assign_edge(model->out_edge(0, Letter::A), g.edge_named("f"));
    CHECK(kind_of([&] { state.assign_edge(model->out_edge(0, Letter::A), g.edge_named("h")); })
          == ErrorKind::conflict);
    CHECK(kind_of([&] { state.assign_edge(model->out_edge(0, Letter::B), g.edge_named("f")); })
          == ErrorKind::colour_mismatch);
    // (e, b) = k would put v at e, which is already u.
    CHECK(kind_of([&] { state.assign_edge(model->out_edge(0, Letter::B), g.edge_named("k")); })
          == ErrorKind::conflict);
  }

  TEST_CASE("enumeration") {
    auto g  = support::graph_E();
    auto c  = support::squares_E(g);
    auto ba = enumerate_morphisms<BsMonoid>(g, c, BsWord(1, 2));
    REQUIRE(ba.size() == 2);
    CHECK(ba[0] == square_morphism<BsMonoid>(g, support::phi1(g)));
    CHECK(ba[1] == square_morphism<BsMonoid>(g, support::phi2(g)));
    auto e = enumerate_morphisms<BsMonoid>(g, c, BsWord());
    REQUIRE(e.size() == 2);
    CHECK(g.name(e[0].range()) == "u");
    CHECK(g.name(e[1].range()) == "v");
    auto big = enumerate_morphisms<BsMonoid>(g, c, BsWord(2, 8));
    CHECK(std::count(big.begin(), big.end(), drawn_lambda(g)) == 1);
    CHECK(enumerate_morphisms<BsMonoid>(g, c, BsWord(2, 8), {.max_results = 1}).size() == 1);
  }

  TEST_CASE("unique lifting against enumeration") {
    auto g = support::graph_E();
    auto c = support::squares_E(g);
    std::map<BsWord, std::vector<BsMorphism>> cache;
    for (auto const& x : all_paths(g, 5)) {
      auto lambda = lift_path_bs(g, c, x, {.check_invariant = true});
      auto it     = cache.find(lambda.degree());
      if (it == cache.end()) {
        it = cache.emplace(lambda.degree(),
                           enumerate_morphisms<BsMonoid>(g, c, lambda.degree())).first;
      }
      std::size_t traversed = 0;
      for (auto const& mu : it->second) {
        if (check_traverses(mu, x)) {
          ++traversed;
          CHECK(mu == lambda);
        }
      }
      CHECK_MESSAGE(traversed == 1, to_string(g, x));
      // Every traversal of lambda lifts back to lambda.
      auto s = shortest_traversal(g, lambda);
      auto l = longest_traversal(g, lambda);
      CHECK(check_traverses(lambda, s));
      CHECK(check_traverses(lambda, l));
      CHECK(lift_path_bs(g, c, s) == lambda);
      CHECK(lift_path_bs(g, c, l) == lambda);
      CHECK(s.size() <= x.size());
      CHECK(l.size() >= x.size());
    }
  }

  TEST_CASE("morphism validation") {
    auto g = support::graph_E();
    auto u = g.vertex_named("u");
    auto f = g.edge_named("f");
    auto gg = g.edge_named("g");
    // E_a: vertices e, a; one red edge.
    CHECK_NOTHROW(make_morphism<BsMonoid>(g, BsWord(1, 0), {u, g.vertex_named("v")}, {f}));
    CHECK(kind_of([&] { make_morphism<BsMonoid>(g, BsWord(1, 0), {u, u}, {gg}); })
          == ErrorKind::colour_mismatch);
    CHECK(kind_of([&] { make_morphism<BsMonoid>(g, BsWord(1, 0), {u, u}, {f}); })
          == ErrorKind::junction_mismatch);
  }
}
