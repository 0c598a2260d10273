#include "bsgraph/graph.hpp"

#include <sstream>  // for istringstream

#include "bsgraph/error.hpp"

namespace bsgraph {

  Letter parse_colour(std::string_view token) {
    if (token == "a" || token == "1") {
      return Letter::A;
    }
    if (token == "b" || token == "2") {
      return Letter::B;
    }
    raise(ErrorKind::bad_colour,
          "'" + std::string(token) + "' is not one of a, b, 1, 2");
  }

  ////////////////////////////////////////////////////////////////////////
  // ColouredGraph
  ////////////////////////////////////////////////////////////////////////

  std::string const& ColouredGraph::name(VertexId v) const {
    if (!contains(v)) {
      raise(ErrorKind::unknown_vertex, "#" + std::to_string(v.index));
    }
    return vertex_names_[v.index];
  }

  std::string const& ColouredGraph::name(EdgeId e) const {
    return edge(e).name;
  }

  EdgeRecord const& ColouredGraph::edge(EdgeId e) const {
    if (!contains(e)) {
      raise(ErrorKind::unknown_edge, "#" + std::to_string(e.index));
    }
    return edges_[e.index];
  }

  std::optional<VertexId> ColouredGraph::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeId> ColouredGraph::find_edge(std::string_view name) const {
    auto it = edge_index_.find(name);
    if (it == edge_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  VertexId ColouredGraph::vertex_named(std::string_view name) const {
    if (auto v = find_vertex(name)) {
      return *v;
    }
    raise(ErrorKind::unknown_vertex, "'" + std::string(name) + "'");
  }

  EdgeId ColouredGraph::edge_named(std::string_view name) const {
    if (auto e = find_edge(name)) {
      return *e;
    }
    raise(ErrorKind::unknown_edge, "'" + std::string(name) + "'");
  }

  std::span<EdgeId const> ColouredGraph::edges_into(VertexId v) const {
    if (!contains(v)) {
      raise(ErrorKind::unknown_vertex, "#" + std::to_string(v.index));
    }
    return into_[v.index];
  }

  std::vector<VertexId> ColouredGraph::vertices() const {
    std::vector<VertexId> result(vertex_count());
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = VertexId{static_cast<std::uint32_t>(i)};
    }
    return result;
  }

  std::vector<EdgeId> ColouredGraph::edges() const {
    std::vector<EdgeId> result(edge_count());
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = EdgeId{static_cast<std::uint32_t>(i)};
    }
    return result;
  }

  ColouredGraph build_graph(std::vector<std::string> const& vertices,
                            std::vector<EdgeDecl> const&    edges) {
    ColouredGraph g;
    auto          check_fresh = [&g](std::string const& name) {
      if (name.empty()) {
        raise(ErrorKind::syntax, "empty identifier");
      }
      if (g.vertex_index_.count(name) || g.edge_index_.count(name)) {
        raise(ErrorKind::duplicate_id, "'" + name + "' is declared twice");
      }
    };
    for (auto const& name : vertices) {
      check_fresh(name);
      VertexId id{static_cast<std::uint32_t>(g.vertex_names_.size())};
      g.vertex_index_.emplace(name, id);
      g.vertex_names_.push_back(name);
    }
    g.into_.resize(g.vertex_names_.size());
    for (auto const& decl : edges) {
      check_fresh(decl.name);
      Letter colour = parse_colour(decl.colour);
      auto   lookup = [&](std::string const& vname) {
        auto it = g.vertex_index_.find(vname);
        if (it == g.vertex_index_.end()) {
          raise(ErrorKind::unknown_vertex,
                "edge '" + decl.name + "' refers to '" + vname + "'");
        }
        return it->second;
      };
      VertexId r = lookup(decl.range);
      VertexId s = lookup(decl.source);
      EdgeId   id{static_cast<std::uint32_t>(g.edges_.size())};
      g.edge_index_.emplace(decl.name, id);
      g.edges_.push_back({decl.name, r, s, colour});
      g.into_[r.index].push_back(id);
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  Path Path::at(VertexId v) {
    Path p;
    p.range_  = v;
    p.source_ = v;
    return p;
  }

  Path validate_path(ColouredGraph const& g, std::span<EdgeId const> ids) {
    if (ids.empty()) {
      raise(ErrorKind::precondition_violated,
            "edge sequence is empty; use a vertex for length-0 paths");
    }
    Path p;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      EdgeRecord const& rec = g.edge(ids[i]);
      if (i > 0 && g.source(ids[i - 1]) != rec.range) {
        raise(ErrorKind::not_composable,
              "s(" + g.name(ids[i - 1]) + ") = " + g.name(g.source(ids[i - 1]))
                  + " but r(" + rec.name + ") = " + g.name(rec.range)
                  + " at junction " + std::to_string(i),
              i);
      }
      p.edges_.push_back(ids[i]);
      p.colours_.push_back(rec.colour);
    }
    p.range_  = g.range(ids.front());
    p.source_ = g.source(ids.back());
    return p;
  }

  Path vertex_path(ColouredGraph const& g, VertexId v) {
    if (!g.contains(v)) {
      raise(ErrorKind::unknown_vertex, "#" + std::to_string(v.index));
    }
    return Path::at(v);
  }

  Path concat(ColouredGraph const& g, Path const& x, Path const& y) {
    if (x.source() != y.range()) {
      raise(ErrorKind::not_composable,
            "s(x) = " + g.name(x.source()) + " but r(y) = " + g.name(y.range()),
            x.size());
    }
    if (x.is_vertex()) {
      return y;
    }
    if (y.is_vertex()) {
      return x;
    }
    std::vector<EdgeId> ids(x.edges().begin(), x.edges().end());
    ids.insert(ids.end(), y.edges().begin(), y.edges().end());
    return validate_path(g, ids);
  }

  Path parse_path(ColouredGraph const& g, std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) {
      tokens.push_back(tok);
    }
    if (tokens.empty()) {
      raise(ErrorKind::syntax, "empty path");
    }
    if (tokens.size() == 1) {
      if (auto v = g.find_vertex(tokens[0])) {
        return Path::at(*v);
      }
    }
    std::vector<EdgeId> ids;
    for (auto const& tok : tokens) {
      if (g.find_vertex(tok)) {
        raise(ErrorKind::syntax,
              "vertex '" + tok + "' inside an edge sequence");
      }
      ids.push_back(g.edge_named(tok));
    }
    return validate_path(g, ids);
  }

  std::string to_string(ColouredGraph const& g, Path const& p) {
    if (p.is_vertex()) {
      return g.name(p.range());
    }
    std::string out;
    for (EdgeId e : p.edges()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += g.name(e);
    }
    return out;
  }

  BsWord path_degree_bs(Path const& p) {
    return fold(p.colours());
  }

  GridDegree path_degree_grid(Path const& p) {
    GridDegree d;
    for (Letter l : p.colours()) {
      d = d + GridDegree::letter(l);
    }
    return d;
  }

  std::vector<Path> paths_with_colours(ColouredGraph const&    g,
                                       std::span<Letter const> colours) {
    std::vector<Path> result;
    if (colours.empty()) {
      return result;
    }
    std::vector<EdgeId> stack;
    auto extend = [&](auto& self, VertexId at, std::size_t depth) -> void {
      if (depth == colours.size()) {
        result.push_back(validate_path(g, stack));
        return;
      }
      for (EdgeId e : g.edges_into(at)) {
        if (g.colour(e) == colours[depth]) {
          stack.push_back(e);
          self(self, g.source(e), depth + 1);
          stack.pop_back();
        }
      }
    };
    for (EdgeId e : g.edges()) {
      if (g.colour(e) == colours[0]) {
        stack.assign(1, e);
        extend(extend, g.source(e), 1);
      }
    }
    return result;
  }

  std::vector<Path> all_paths(ColouredGraph const& g, std::size_t max_length) {
    std::vector<Path> result;
    for (VertexId v : g.vertices()) {
      result.push_back(Path::at(v));
    }
    std::vector<std::vector<EdgeId>> frontier;
    for (EdgeId e : g.edges()) {
      frontier.push_back({e});
    }
    for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
      std::vector<std::vector<EdgeId>> next;
      for (auto const& ids : frontier) {
        result.push_back(validate_path(g, ids));
        if (len == max_length) {
          continue;
        }
        for (EdgeId e : g.edges_into(g.source(ids.back()))) {
          auto longer = ids;
          longer.push_back(e);
          next.push_back(std::move(longer));
        }
      }
      frontier = std::move(next);
    }
    return result;
  }

}  // namespace bsgraph
