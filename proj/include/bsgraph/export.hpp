// DOT, JSON and text renderings of graphs, morphisms and reports.
//
// JSON schemas (keys are stable):
//   morphism:     {mode, degree "(N,M)", degree_word, range, source,
//                  vertices: [{prefix, word, image}],
//                  edges: [{prefix, word, letter, image}]}
//                 prefix is the "(N,M)" pair, word its shortest form.
//   completeness: {mode, complete, squares, red_first_paths,
//                  blue_first_paths, uncovered_red_first: [path],
//                  uncovered_blue_first: [path], duplicated, malformed}
//   verification: {mode, max_length, pool_size, passed,
//                  laws: [{name, instances, failures, counterexample?}]}

#ifndef BSGRAPH_EXPORT_HPP_
#define BSGRAPH_EXPORT_HPP_

#include <string>  // for string

#include "json.hpp"

#include "bsgraph/category.hpp"
#include "bsgraph/graph.hpp"
#include "bsgraph/model.hpp"
#include "bsgraph/morphism.hpp"
#include "bsgraph/squares.hpp"

namespace bsgraph {

  // Edges are drawn source -> range.
  std::string to_dot(ColouredGraph const& g, std::string const& name = "E");

  template <typename M>
  std::string to_dot(ModelGraph<M> const& model) {
    std::string out = "digraph model {\n";
    for (std::size_t i = 0; i < model.vertex_count(); ++i) {
      out += "  v" + std::to_string(i) + " [label=\"" + M::label(model.vertex(i)) + "\"];\n";
    }
    for (auto const& e : model.edges()) {
      out += "  v" + std::to_string(e.target) + " -> v" + std::to_string(e.base)
             + " [color=" + (e.letter == Letter::A ? "red" : "blue") + "];\n";
    }
    return out + "}\n";
  }

  // The image of lambda: model vertices labelled "prefix: image".
  template <typename M>
  std::string to_dot(ColouredGraph const& g, Morphism<M> const& lambda) {
    auto const& model = lambda.domain();
    std::string out   = "digraph morphism {\n";
    for (std::size_t i = 0; i < model.vertex_count(); ++i) {
      out += "  v" + std::to_string(i) + " [label=\"" + M::label(model.vertex(i)) + ": "
             + g.name(lambda.vertex_images()[i]) + "\"];\n";
    }
    for (std::size_t i = 0; i < model.edge_count(); ++i) {
      auto const& e = model.edge(i);
      out += "  v" + std::to_string(e.target) + " -> v" + std::to_string(e.base)
             + " [color=" + (e.letter == Letter::A ? "red" : "blue") + ", label=\""
             + g.name(lambda.edge_images()[i]) + "\"];\n";
    }
    return out + "}\n";
  }

  template <typename M>
  nlohmann::ordered_json to_json(ColouredGraph const& g, Morphism<M> const& lambda) {
    auto const& model = lambda.domain();
    nlohmann::ordered_json j;
    j["mode"]        = to_string(M::mode);
    j["degree"]      = M::format(lambda.degree());
    j["degree_word"] = M::label(lambda.degree());
    j["range"]       = g.name(lambda.range());
    j["source"]      = g.name(lambda.source());
    auto vertices    = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < model.vertex_count(); ++i) {
      vertices.push_back({{"prefix", M::format(model.vertex(i))},
                          {"word", M::label(model.vertex(i))},
                          {"image", g.name(lambda.vertex_images()[i])}});
    }
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < model.edge_count(); ++i) {
      auto const& e = model.edge(i);
      edges.push_back({{"prefix", M::format(model.vertex(e.base))},
                       {"word", M::label(model.vertex(e.base))},
                       {"letter", std::string(1, to_char(e.letter))},
                       {"image", g.name(lambda.edge_images()[i])}});
    }
    j["vertices"] = std::move(vertices);
    j["edges"]    = std::move(edges);
    return j;
  }

  // One line per model edge, "prefix letter -> image", in domain order.
  template <typename M>
  std::string to_text(ColouredGraph const& g, Morphism<M> const& lambda) {
    auto const& model = lambda.domain();
    std::string out   = "degree " + M::format(lambda.degree()) + " = "
                      + M::label(lambda.degree()) + ", range " + g.name(lambda.range())
                      + ", source " + g.name(lambda.source()) + "\n";
    out += std::to_string(model.vertex_count()) + " vertices, "
           + std::to_string(model.edge_count()) + " edges\n";
    for (std::size_t i = 0; i < model.vertex_count(); ++i) {
      out += "  vertex " + M::format(model.vertex(i)) + " -> "
             + g.name(lambda.vertex_images()[i]) + "\n";
    }
    for (std::size_t i = 0; i < model.edge_count(); ++i) {
      auto const& e = model.edge(i);
      out += "  edge " + M::format(model.vertex(e.base)) + " " + to_char(e.letter) + " -> "
             + g.name(lambda.edge_images()[i]) + "\n";
    }
    return out;
  }

  nlohmann::ordered_json to_json(ColouredGraph const& g, CompletenessReport const& report);
  std::string            to_text(ColouredGraph const& g, CompletenessReport const& report);

  nlohmann::ordered_json to_json(VerificationReport const& report);
  std::string            to_text(VerificationReport const& report);

}  // namespace bsgraph

#endif  // BSGRAPH_EXPORT_HPP_
