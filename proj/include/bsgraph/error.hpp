// Error type shared by every bsgraph module.

#ifndef BSGRAPH_ERROR_HPP_
#define BSGRAPH_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move

namespace bsgraph {

  enum class ErrorKind {
    syntax,
    negative_exponent,
    not_a_prefix,
    duplicate_id,
    unknown_vertex,
    unknown_edge,
    bad_colour,
    not_composable,
    colour_mismatch,
    junction_mismatch,
    not_covered,
    conflict,
    precondition_violated,
    degree_mismatch,
    incomplete_collection,
    resource_limit,
  };

  char const* to_string(ErrorKind kind) noexcept;

  // Thrown for every recoverable failure. `index()` carries the offending
  // position where one exists (e.g. the junction for not_composable).
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message, std::size_t index = 0)
        : std::runtime_error(message), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept {
      return kind_;
    }

    std::size_t index() const noexcept {
      return index_;
    }

   private:
    ErrorKind   kind_;
    std::size_t index_;
  };

  [[noreturn]] inline void raise(ErrorKind kind, std::string message,
                                 std::size_t index = 0) {
    throw Error(kind, std::string(to_string(kind)) + ": " + std::move(message),
                index);
  }

}  // namespace bsgraph

#endif  // BSGRAPH_ERROR_HPP_
