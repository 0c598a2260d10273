#include "bsgraph/fixture.hpp"

#include <fstream>  // for ifstream
#include <map>      // for map
#include <sstream>  // for istringstream, ostringstream

#include "bsgraph/error.hpp"

namespace bsgraph {

  namespace {
    std::vector<std::string> split(std::string_view line) {
      std::vector<std::string> tokens;
      std::istringstream       in{std::string(line)};
      std::string              token;
      while (in >> token) {
        tokens.push_back(token);
      }
      return tokens;
    }

    [[noreturn]] void fail_at(std::size_t line, ErrorKind kind, std::string const& msg) {
      raise(kind, "line " + std::to_string(line) + ": " + msg, line);
    }

    Mode parse_mode(std::string const& token, std::size_t line) {
      if (token == "bs") {
        return Mode::bs;
      }
      if (token == "grid") {
        return Mode::grid;
      }
      fail_at(line, ErrorKind::syntax, "unknown mode '" + token + "'");
    }

    Square resolve(ColouredGraph const& g, Mode mode, SquareDecl const& decl,
                   std::size_t line) {
      auto const&                        names = slot_names(mode);
      std::map<std::string, std::string> given;
      for (auto const& [slot, edge] : decl.slots) {
        if (!given.emplace(slot, edge).second) {
          fail_at(line, ErrorKind::syntax, "slot " + slot + " given twice");
        }
      }
      std::vector<EdgeId> ids;
      for (auto const& slot : names) {
        auto it = given.find(slot);
        if (it == given.end()) {
          fail_at(line, ErrorKind::syntax,
                  "square '" + decl.name + "' is missing slot " + slot);
        }
        auto e = g.find_edge(it->second);
        if (!e) {
          fail_at(line, ErrorKind::unknown_edge, "'" + it->second + "'");
        }
        ids.push_back(*e);
        given.erase(it);
      }
      if (!given.empty()) {
        fail_at(line, ErrorKind::syntax, "unknown slot " + given.begin()->first + " for "
                                             + to_string(mode) + " mode");
      }
      try {
        return build_square(g, mode, decl.name, ids);
      } catch (Error const& err) {
        fail_at(line, err.kind(), err.what());
      }
    }
  }  // namespace

  Fixture parse_fixture(std::string_view text) {
    Fixture                  fx;
    std::vector<std::size_t> square_lines;
    std::size_t              line_no = 0;
    std::istringstream       in{std::string(text)};
    std::string              line;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto tokens = split(line);
      if (tokens.empty()) {
        continue;
      }
      auto const& kw = tokens[0];
      if (kw == "mode") {
        if (tokens.size() != 2) {
          fail_at(line_no, ErrorKind::syntax, "expected 'mode bs|grid'");
        }
        if (fx.explicit_mode || !fx.squares.empty()) {
          fail_at(line_no, ErrorKind::syntax, "mode must be given once, before any square");
        }
        fx.mode          = parse_mode(tokens[1], line_no);
        fx.explicit_mode = true;
      } else if (kw == "vertex") {
        if (tokens.size() != 2) {
          fail_at(line_no, ErrorKind::syntax, "expected 'vertex <name>'");
        }
        fx.vertices.push_back(tokens[1]);
      } else if (kw == "edge") {
        if (tokens.size() != 5) {
          fail_at(line_no, ErrorKind::syntax,
                  "expected 'edge <name> <colour> <range> <source>'");
        }
        try {
          parse_colour(tokens[2]);
        } catch (Error const& err) {
          fail_at(line_no, err.kind(), err.what());
        }
        fx.edges.push_back({tokens[1], tokens[2], tokens[3], tokens[4]});
      } else if (kw == "square") {
        if (tokens.size() < 2) {
          fail_at(line_no, ErrorKind::syntax, "expected 'square <name> slot=edge ...'");
        }
        SquareDecl decl{tokens[1], {}};
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          auto eq = tokens[i].find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[i].size()) {
            fail_at(line_no, ErrorKind::syntax, "expected slot=edge, got '" + tokens[i] + "'");
          }
          decl.slots.emplace_back(tokens[i].substr(0, eq), tokens[i].substr(eq + 1));
        }
        fx.squares.push_back(std::move(decl));
        square_lines.push_back(line_no);
      } else {
        fail_at(line_no, ErrorKind::syntax, "unknown keyword '" + kw + "'");
      }
    }

    fx.graph = build_graph(fx.vertices, fx.edges);
    std::vector<Square> squares;
    for (std::size_t i = 0; i < fx.squares.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (fx.squares[j].name == fx.squares[i].name) {
          fail_at(square_lines[i], ErrorKind::duplicate_id,
                  "square '" + fx.squares[i].name + "' is declared twice");
        }
      }
      squares.push_back(resolve(fx.graph, fx.mode, fx.squares[i], square_lines[i]));
    }
    fx.collection = SquareCollection(fx.mode, std::move(squares));
    return fx;
  }

  Fixture load_fixture(std::filesystem::path const& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      raise(ErrorKind::syntax, "cannot read '" + file.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_fixture(text.str());
  }

  std::string serialize(ColouredGraph const& g, SquareCollection const& collection) {
    std::ostringstream out;
    out << "mode " << to_string(collection.mode()) << '\n';
    for (VertexId v : g.vertices()) {
      out << "vertex " << g.name(v) << '\n';
    }
    for (EdgeId e : g.edges()) {
      out << "edge " << g.name(e) << ' ' << to_char(g.colour(e)) << ' '
          << g.name(g.range(e)) << ' ' << g.name(g.source(e)) << '\n';
    }
    auto const& names = slot_names(collection.mode());
    for (auto const& sq : collection.squares()) {
      out << "square " << sq.name;
      auto slots = sq.slots();
      for (std::size_t i = 0; i < slots.size(); ++i) {
        out << ' ' << names[i] << '=' << g.name(slots[i]);
      }
      out << '\n';
    }
    return out.str();
  }

  std::string serialize(Fixture const& fixture) {
    return serialize(fixture.graph, fixture.collection);
  }

}  // namespace bsgraph
