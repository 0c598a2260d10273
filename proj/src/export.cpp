#include "bsgraph/export.hpp"

namespace bsgraph {

  std::string to_dot(ColouredGraph const& g, std::string const& name) {
    std::string out = "digraph " + name + " {\n";
    for (VertexId v : g.vertices()) {
      out += "  \"" + g.name(v) + "\";\n";
    }
    for (EdgeId e : g.edges()) {
      out += "  \"" + g.name(g.source(e)) + "\" -> \"" + g.name(g.range(e)) + "\" [label=\""
             + g.name(e) + "\", color=" + (g.colour(e) == Letter::A ? "red" : "blue")
             + "];\n";
    }
    return out + "}\n";
  }

  nlohmann::ordered_json to_json(ColouredGraph const& g, CompletenessReport const& report) {
    auto paths = [&g](std::vector<Path> const& ps) {
      auto arr = nlohmann::ordered_json::array();
      for (auto const& p : ps) {
        arr.push_back(to_string(g, p));
      }
      return arr;
    };
    nlohmann::ordered_json j;
    j["mode"]                 = to_string(report.mode);
    j["complete"]             = report.complete();
    j["squares"]              = report.square_count;
    j["red_first_paths"]      = report.red_first_paths;
    j["blue_first_paths"]     = report.blue_first_paths;
    j["uncovered_red_first"]  = paths(report.uncovered_red);
    j["uncovered_blue_first"] = paths(report.uncovered_blue);
    j["duplicated"]           = report.duplicated;
    j["malformed"]            = report.malformed;
    return j;
  }

  std::string to_text(ColouredGraph const& g, CompletenessReport const& report) {
    std::string counts = std::to_string(report.square_count) + " squares, "
                         + std::to_string(report.red_first_paths) + " red-first paths, "
                         + std::to_string(report.blue_first_paths) + " blue-first paths\n";
    if (report.complete()) {
      return "complete: " + counts;
    }
    std::string out = "incomplete: " + counts;
    for (auto const& p : report.uncovered_red) {
      out += "  uncovered red-first path: " + to_string(g, p) + "\n";
    }
    for (auto const& p : report.uncovered_blue) {
      out += "  uncovered blue-first path: " + to_string(g, p) + "\n";
    }
    for (auto const& d : report.duplicated) {
      out += "  duplicated boundary: " + d + "\n";
    }
    for (auto const& m : report.malformed) {
      out += "  malformed square: " + m + "\n";
    }
    return out;
  }

  nlohmann::ordered_json to_json(VerificationReport const& report) {
    nlohmann::ordered_json j;
    j["mode"]       = to_string(report.mode);
    j["max_length"] = report.max_length;
    j["pool_size"]  = report.pool_size;
    j["passed"]     = report.passed();
    auto laws       = nlohmann::ordered_json::array();
    for (auto const& law : report.laws) {
      nlohmann::ordered_json l;
      l["name"]      = law.name;
      l["instances"] = law.instances;
      l["failures"]  = law.failures;
      if (!law.passed()) {
        l["counterexample"] = law.counterexample;
      }
      laws.push_back(std::move(l));
    }
    j["laws"] = std::move(laws);
    return j;
  }

  std::string to_text(VerificationReport const& report) {
    std::string out = std::string(report.passed() ? "pass" : "FAIL") + ": "
                      + to_string(report.mode) + " mode, max length "
                      + std::to_string(report.max_length) + ", pool of "
                      + std::to_string(report.pool_size) + " morphisms\n";
    for (auto const& law : report.laws) {
      out += "  " + law.name + ": " + std::to_string(law.instances) + " instances, "
             + std::to_string(law.failures) + " failures\n";
      if (!law.passed()) {
        out += "    counterexample: " + law.counterexample + "\n";
      }
    }
    return out;
  }

}  // namespace bsgraph
