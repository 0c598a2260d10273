#include "bsgraph/morphism.hpp"

namespace bsgraph {

  Path rewrite_tail(ColouredGraph const& g, BsMorphism const& lambda, Path const& z) {
    auto colours = z.colours();
    if (z.size() < 2 || colours[z.size() - 2] != Letter::B
        || colours[z.size() - 1] != Letter::A) {
      raise(ErrorKind::precondition_violated,
            "path '" + to_string(g, z) + "' does not end in a blue-red pair");
    }
    if (!check_traverses(lambda, z)) {
      raise(ErrorKind::precondition_violated,
            "path '" + to_string(g, z) + "' does not traverse the morphism");
    }
    std::vector<EdgeId> ids(z.edges().begin(), z.edges().end() - 2);
    BsWord at = fold(colours.first(z.size() - 2));
    for (Letter l : {Letter::A, Letter::B, Letter::B}) {
      ids.push_back(lambda.at(at, l));
      at = extend(at, l);
    }
    return validate_path(g, ids);
  }

}  // namespace bsgraph
