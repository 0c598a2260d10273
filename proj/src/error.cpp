#include "bsgraph/error.hpp"

namespace bsgraph {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::syntax:
        return "SyntaxError";
      case ErrorKind::negative_exponent:
        return "NegativeExponent";
      case ErrorKind::not_a_prefix:
        return "NotAPrefix";
      case ErrorKind::duplicate_id:
        return "DuplicateId";
      case ErrorKind::unknown_vertex:
        return "UnknownVertex";
      case ErrorKind::unknown_edge:
        return "UnknownEdge";
      case ErrorKind::bad_colour:
        return "BadColour";
      case ErrorKind::not_composable:
        return "NotComposable";
      case ErrorKind::colour_mismatch:
        return "ColourMismatch";
      case ErrorKind::junction_mismatch:
        return "JunctionMismatch";
      case ErrorKind::not_covered:
        return "NotCovered";
      case ErrorKind::conflict:
        return "Conflict";
      case ErrorKind::precondition_violated:
        return "PreconditionViolated";
      case ErrorKind::degree_mismatch:
        return "DegreeMismatch";
      case ErrorKind::incomplete_collection:
        return "IncompleteCollection";
      case ErrorKind::resource_limit:
        return "ResourceLimit";
    }
    return "Error";
  }

}  // namespace bsgraph
