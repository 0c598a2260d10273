// One line per acceptance criterion: PASS or FAIL, a short measurement,
// and the wall time against its budget. Exit status is the number of
// failed criteria.

#include <chrono>    // for steady_clock
#include <cstdio>    // for printf
#include <exception> // for exception
#include <functional> // for function
#include <map>       // for map
#include <sstream>   // for ostringstream
#include <string>    // for string

#include "bsgraph/category.hpp"
#include "bsgraph/cli.hpp"
#include "bsgraph/error.hpp"
#include "bsgraph/fixture.hpp"
#include "oracles.hpp"

using namespace bsgraph;

namespace {
  struct Outcome {
    bool        ok = false;
    std::string detail;
  };

  std::string fixture(char const* name) {
    return std::string(BSGRAPH_FIXTURE_DIR) + "/" + name;
  }

  std::pair<int, std::string> cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str()};
  }

  Outcome fixture_reproduction() {
    auto [code, out] = cli_run({"check", fixture("example_E.cg")});
    auto fx          = load_fixture(fixture("example_E.cg"));
    auto report      = check_complete(fx.graph, fx.collection);
    std::vector<std::string> red, blue;
    for (auto const& p : paths_with_colours(fx.graph, BsMonoid::red_first)) {
      red.push_back(to_string(fx.graph, p));
    }
    for (auto const& p : paths_with_colours(fx.graph, BsMonoid::blue_first)) {
      blue.push_back(to_string(fx.graph, p));
    }
    bool ok = code == 0
              && out == "complete: 2 squares, 2 red-first paths, 2 blue-first paths\n"
              && report.complete() && red == std::vector<std::string>{"f k k", "h g g"}
              && blue == std::vector<std::string>{"g f", "k h"};
    return {ok, "red-first {" + red[0] + ", " + red[1] + "}, blue-first {" + blue[0] + ", "
                    + blue[1] + "}"};
  }

  Outcome lift_reproduction() {
    auto fx     = load_fixture(fixture("example_E.cg"));
    auto& g     = fx.graph;
    auto lambda = lift_path_bs(g, fx.collection, parse_path(g, "g g f h"));
    auto const& m = lambda.domain();
    char const* rows[]  = {"u", "v", "u"};
    char const* blues[] = {"g", "k", "g"};
    char const* reds[]  = {"f", "h"};
    bool        maps    = true;
    for (std::size_t i = 0; i < m.vertex_count(); ++i) {
      maps = maps && g.name(lambda.vertex_images()[i]) == rows[m.vertex(i).n_a()];
    }
    for (std::size_t i = 0; i < m.edge_count(); ++i) {
      auto const& e   = m.edge(i);
      auto        row = m.vertex(e.base).n_a();
      maps = maps
             && g.name(lambda.edge_images()[i])
                    == (e.letter == Letter::B ? blues[row] : reds[row]);
    }
    bool ok = lambda.degree() == BsWord(2, 8) && m.vertex_count() == 17
              && m.edge_count() == 22 && maps;
    return {ok, std::to_string(m.vertex_count()) + " vertices, "
                    + std::to_string(m.edge_count()) + " edges, maps "
                    + (maps ? "match" : "differ")};
  }

  Outcome traversal_extremes() {
    auto fx     = load_fixture(fixture("example_E.cg"));
    auto& g     = fx.graph;
    auto lambda = lift_path_bs(g, fx.collection, parse_path(g, "g g f h"));
    auto s      = shortest_traversal(g, lambda);
    auto l      = longest_traversal(g, lambda);
    bool ok     = to_string(g, s) == "g g f h" && to_string(g, l) == "f h g g g g g g g g"
              && path_degree_bs(s) == BsWord(2, 8) && path_degree_bs(l) == BsWord(2, 8);
    return {ok, "shortest " + std::to_string(s.size()) + ", longest "
                    + std::to_string(l.size()) + ", both of degree "
                    + to_pair_string(path_degree_bs(l))};
  }

  Outcome oracle_uniqueness() {
    auto fx = load_fixture(fixture("example_E.cg"));
    auto& g = fx.graph;
    std::map<BsWord, std::vector<BsMorphism>> cache;
    std::size_t paths = 0, bad = 0;
    std::string first_bad;
    for (auto const& x : all_paths(g, 6)) {
      ++paths;
      auto lambda = lift_path_bs(g, fx.collection, x);
      auto it     = cache.find(lambda.degree());
      if (it == cache.end()) {
        it = cache.emplace(lambda.degree(),
                           enumerate_morphisms<BsMonoid>(g, fx.collection, lambda.degree()))
                 .first;
      }
      std::size_t traversed = 0;
      bool        equal     = false;
      for (auto const& mu : it->second) {
        if (check_traverses(mu, x)) {
          ++traversed;
          equal = mu == lambda;
        }
      }
      if (traversed != 1 || !equal) {
        if (bad++ == 0) {
          first_bad = to_string(g, x);
        }
      }
    }
    return {bad == 0, std::to_string(paths) + " paths, " + std::to_string(cache.size())
                          + " degrees enumerated"
                          + (bad ? ", first failure: " + first_bad : std::string())};
  }

  Outcome verification_suites() {
    std::string detail;
    bool        ok = true;
    for (auto const* name : {"example_E.cg", "grid_single_vertex.cg"}) {
      auto [code, out] = cli_run({"verify", fixture(name), "--max-len", "4"});
      auto first_line  = out.substr(0, out.find('\n'));
      ok               = ok && code == 0;
      detail += (detail.empty() ? "" : "; ") + first_line;
    }
    return {ok, detail};
  }

  Outcome word_soundness() {
    auto        inputs    = oracle::strings_up_to(8);
    auto        partition = oracle::partition(inputs);
    std::size_t disagreements = 0;
    std::map<BsWord, std::size_t> label_of;
    std::map<std::size_t, BsWord> word_of;
    for (auto const& s : inputs) {
      LetterString letters;
      for (char c : s) {
        letters.push_back(c == 'a' ? Letter::A : Letter::B);
      }
      auto w     = fold(letters);
      auto label = partition.label.at(s);
      auto a     = label_of.emplace(w, label).first;
      auto b     = word_of.emplace(label, w).first;
      disagreements += a->second != label || b->second != w;
    }
    auto        best       = oracle::geodesic_lengths(11);
    std::size_t non_geodesic = 0;
    for (std::uint64_t n = 0; n <= 3; ++n) {
      for (std::uint64_t m = 0; m <= 8; ++m) {
        auto form = shortest_form(BsWord(n, m));
        non_geodesic += fold(form) != BsWord(n, m) || form.size() != best.at({n, m});
      }
    }
    return {disagreements == 0 && non_geodesic == 0,
            std::to_string(inputs.size()) + " strings in " + std::to_string(partition.classes)
                + " classes (" + std::to_string(partition.members) + " closure members), "
                + std::to_string(disagreements) + " disagreements, "
                + std::to_string(non_geodesic) + " non-geodesic forms"};
  }

  Outcome grid_cross_check() {
    auto fx = load_fixture(fixture("grid_single_vertex.cg"));
    auto& g = fx.graph;
    auto rho  = g.edge_named("rho");
    auto beta = g.edge_named("beta");
    std::size_t degrees = 0, bad = 0;
    for (std::uint64_t m = 0; m <= 6; ++m) {
      for (std::uint64_t n = 0; m + n <= 6; ++n) {
        ++degrees;
        auto all = enumerate_morphisms<GridMonoid>(g, fx.collection, {m, n});
        // Alternate the colours while both remain, so lifts exercise both
        // propagation directions.
        std::vector<EdgeId> ids;
        for (std::uint64_t i = 0, j = 0; i < m || j < n;) {
          if (j < n && (i >= m || (i + j) % 2 == 1)) {
            ids.push_back(beta), ++j;
          } else {
            ids.push_back(rho), ++i;
          }
        }
        auto x = ids.empty() ? vertex_path(g, g.vertex_named("w")) : validate_path(g, ids);
        bad += all.size() != 1 || lift_path_grid(g, fx.collection, x) != all.front();
      }
    }
    return {bad == 0, std::to_string(degrees) + " degrees, " + std::to_string(bad)
                          + " without a unique morphism equal to the lift"};
  }

  Outcome negative_path() {
    auto [check_code, check_out] = cli_run({"check", fixture("example_E_missing_phi2.cg")});
    auto [lift_code, lift_out] =
        cli_run({"lift", fixture("example_E_missing_phi2.cg"), "--path", "g g f h"});
    bool listed = check_out.find("red-first path: h g g\n") != std::string::npos
                  && check_out.find("blue-first path: k h\n") != std::string::npos;
    bool not_covered = lift_out.find("NotCovered") != std::string::npos
                       && lift_out.find("'k h'") != std::string::npos;
    return {check_code == 1 && listed && lift_code == 1 && not_covered,
            "check exit " + std::to_string(check_code) + (listed ? " listing h g g, k h" : "")
                + "; lift exit " + std::to_string(lift_code) + ": "
                + lift_out.substr(0, lift_out.find('\n'))};
  }

  struct Criterion {
    int                      number;
    char const*              name;
    double                   budget_seconds;
    std::function<Outcome()> check;
  };
}  // namespace

int main() {
  Criterion const criteria[] = {
      {1, "fixture reproduction", 1, fixture_reproduction},
      {2, "lift reproduction", 1, lift_reproduction},
      {3, "traversal extremes", 1, traversal_extremes},
      {4, "oracle uniqueness", 120, oracle_uniqueness},
      {5, "category, functor and factorisation suites", 120, verification_suites},
      {6, "word-arithmetic soundness", 60, word_soundness},
      {7, "grid cross-check", 60, grid_cross_check},
      {8, "negative path", 1, negative_path},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto    start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (std::exception const& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds <= c.budget_seconds;
    bool ok      = outcome.ok && in_time;
    failed += !ok;
    std::printf("%s criterion %d (%s): %s [%.3fs of %.0fs]%s\n", ok ? "PASS" : "FAIL",
                c.number, c.name, outcome.detail.c_str(), seconds, c.budget_seconds,
                in_time ? "" : " over budget");
  }
  return failed;
}
