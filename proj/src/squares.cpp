#include "bsgraph/squares.hpp"

#include <algorithm>  // for find_if

#include "bsgraph/error.hpp"

namespace bsgraph {

  namespace {
    constexpr Letter kBsRed[]    = {Letter::A, Letter::B, Letter::B};
    constexpr Letter kBsBlue[]   = {Letter::B, Letter::A};
    constexpr Letter kGridRed[]  = {Letter::A, Letter::B};
    constexpr Letter kGridBlue[] = {Letter::B, Letter::A};

    std::string edge_names(ColouredGraph const& g, std::span<EdgeId const> ids) {
      std::string out;
      for (EdgeId e : ids) {
        if (!out.empty()) {
          out += ' ';
        }
        out += g.contains(e) ? g.name(e) : "#" + std::to_string(e.index);
      }
      return out;
    }
  }  // namespace

  std::vector<std::string> const& slot_names(Mode mode) {
    static std::vector<std::string> const bs   = {"eA", "aB", "abB", "eB", "bA"};
    static std::vector<std::string> const grid = {"v1", "e1v2", "v2", "e2v1"};
    return mode == Mode::bs ? bs : grid;
  }

  std::span<Letter const> red_first_colours(Mode mode) {
    if (mode == Mode::bs) {
      return kBsRed;
    }
    return kGridRed;
  }

  std::span<Letter const> blue_first_colours(Mode mode) {
    if (mode == Mode::bs) {
      return kBsBlue;
    }
    return kGridBlue;
  }

  std::vector<EdgeId> Square::slots() const {
    std::vector<EdgeId> result = red_first;
    result.insert(result.end(), blue_first.begin(), blue_first.end());
    return result;
  }

  void validate_square(ColouredGraph const& g, Square const& sq) {
    auto const& names = slot_names(sq.mode);
    auto        red   = red_first_colours(sq.mode);
    auto        blue  = blue_first_colours(sq.mode);
    if (sq.red_first.size() != red.size() || sq.blue_first.size() != blue.size()) {
      raise(ErrorKind::precondition_violated,
            "square '" + sq.name + "' has the wrong number of edges");
    }
    auto slots = sq.slots();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!g.contains(slots[i])) {
        raise(ErrorKind::unknown_edge,
              "square '" + sq.name + "' slot " + names[i] + " refers to #"
                  + std::to_string(slots[i].index));
      }
      Letter want = i < red.size() ? red[i] : blue[i - red.size()];
      if (g.colour(slots[i]) != want) {
        raise(ErrorKind::colour_mismatch,
              "square '" + sq.name + "': " + g.name(slots[i]) + " in slot "
                  + names[i] + " must be "
                  + (want == Letter::A ? "red" : "blue"));
      }
    }
    std::size_t const nr = red.size();
    auto              fail = [&](std::string const& equation) {
      raise(ErrorKind::junction_mismatch,
            "square '" + sq.name + "' violates " + equation);
    };
    // Common range.
    if (g.range(slots[0]) != g.range(slots[nr])) {
      fail("r(" + names[0] + ") = r(" + names[nr] + ")");
    }
    // Each boundary is a path.
    for (std::size_t i = 1; i < slots.size(); ++i) {
      if (i == nr) {
        continue;
      }
      if (g.source(slots[i - 1]) != g.range(slots[i])) {
        fail("s(" + names[i - 1] + ") = r(" + names[i] + ")");
      }
    }
    // Common source.
    if (g.source(slots[nr - 1]) != g.source(slots.back())) {
      fail("s(" + names[nr - 1] + ") = s(" + names.back() + ")");
    }
  }

  Square build_square(ColouredGraph const& g, Mode mode, std::string name,
                      std::span<EdgeId const> edges) {
    std::size_t nr = red_first_colours(mode).size();
    if (edges.size() != slot_names(mode).size()) {
      raise(ErrorKind::precondition_violated,
            "square '" + name + "' needs " + std::to_string(slot_names(mode).size())
                + " edges");
    }
    Square sq{std::move(name), mode,
              std::vector<EdgeId>(edges.begin(), edges.begin() + nr),
              std::vector<EdgeId>(edges.begin() + nr, edges.end())};
    validate_square(g, sq);
    return sq;
  }

  Square build_square(ColouredGraph const& g, std::string name,
                      BsSquareEdges const& e) {
    EdgeId const ids[] = {e.eA, e.aB, e.abB, e.eB, e.bA};
    return build_square(g, Mode::bs, std::move(name), ids);
  }

  Square build_square(ColouredGraph const& g, std::string name,
                      GridSquareEdges const& e) {
    EdgeId const ids[] = {e.v1, e.e1v2, e.v2, e.e2v1};
    return build_square(g, Mode::grid, std::move(name), ids);
  }

  ////////////////////////////////////////////////////////////////////////
  // SquareCollection
  ////////////////////////////////////////////////////////////////////////

  SquareCollection::SquareCollection(Mode mode, std::vector<Square> squares)
      : mode_(mode), squares_(std::move(squares)) {
    for (std::size_t i = 0; i < squares_.size(); ++i) {
      if (squares_[i].mode != mode_) {
        raise(ErrorKind::precondition_violated,
              "square '" + squares_[i].name + "' is a "
                  + to_string(squares_[i].mode) + " square in a "
                  + to_string(mode_) + " collection");
      }
      red_index_.emplace(squares_[i].red_first, i);
      blue_index_.emplace(squares_[i].blue_first, i);
    }
  }

  Square const* SquareCollection::find_red(std::span<EdgeId const> boundary) const {
    auto it = red_index_.find(std::vector<EdgeId>(boundary.begin(), boundary.end()));
    return it == red_index_.end() ? nullptr : &squares_[it->second];
  }

  Square const* SquareCollection::find_blue(std::span<EdgeId const> boundary) const {
    auto it = blue_index_.find(std::vector<EdgeId>(boundary.begin(), boundary.end()));
    return it == blue_index_.end() ? nullptr : &squares_[it->second];
  }

  Square const& SquareCollection::lookup_red(ColouredGraph const&    g,
                                             std::span<EdgeId const> boundary) const {
    if (auto const* sq = find_red(boundary)) {
      return *sq;
    }
    raise(ErrorKind::not_covered,
          "no square has red-first boundary '" + edge_names(g, boundary) + "'");
  }

  Square const& SquareCollection::lookup_blue(ColouredGraph const&    g,
                                              std::span<EdgeId const> boundary) const {
    if (auto const* sq = find_blue(boundary)) {
      return *sq;
    }
    raise(ErrorKind::not_covered,
          "no square has blue-first boundary '" + edge_names(g, boundary) + "'");
  }

  bool SquareCollection::contains_edges(Square const& sq) const {
    return std::find_if(squares_.begin(), squares_.end(),
                        [&sq](Square const& x) { return x.same_edges(sq); })
           != squares_.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // check_complete
  ////////////////////////////////////////////////////////////////////////

  CompletenessReport check_complete(ColouredGraph const&    g,
                                    SquareCollection const& collection) {
    CompletenessReport report;
    report.mode         = collection.mode();
    report.square_count = collection.size();

    std::map<std::vector<EdgeId>, std::vector<std::string>> red_owners;
    std::map<std::vector<EdgeId>, std::vector<std::string>> blue_owners;
    for (auto const& sq : collection.squares()) {
      try {
        validate_square(g, sq);
      } catch (Error const& e) {
        report.malformed.push_back(sq.name + ": " + e.what());
        continue;
      }
      red_owners[sq.red_first].push_back(sq.name);
      blue_owners[sq.blue_first].push_back(sq.name);
    }

    auto scan = [&](std::span<Letter const> colours,
                    std::map<std::vector<EdgeId>, std::vector<std::string>> const& owners,
                    std::vector<Path>& uncovered, char const* side) {
      auto paths = paths_with_colours(g, colours);
      for (auto const& p : paths) {
        std::vector<EdgeId> key(p.edges().begin(), p.edges().end());
        if (!owners.count(key)) {
          uncovered.push_back(p);
        }
      }
      for (auto const& [boundary, names] : owners) {
        if (names.size() > 1) {
          std::string who;
          for (auto const& n : names) {
            who += (who.empty() ? "" : ", ") + n;
          }
          report.duplicated.push_back(std::string(side) + " boundary '"
                                      + edge_names(g, boundary)
                                      + "' shared by " + who);
        }
      }
      return paths.size();
    };
    report.red_first_paths = scan(red_first_colours(collection.mode()),
                                  red_owners, report.uncovered_red, "red-first");
    report.blue_first_paths = scan(blue_first_colours(collection.mode()),
                                   blue_owners, report.uncovered_blue, "blue-first");
    return report;
  }

}  // namespace bsgraph
