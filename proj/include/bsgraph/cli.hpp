// Command-line front end. Exit codes: 0 success, 1 mathematical finding
// (incomplete collection, uncovered boundary, law violation), 2 usage or
// input error.

#ifndef BSGRAPH_CLI_HPP_
#define BSGRAPH_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace bsgraph::cli {

  inline constexpr int kOk      = 0;
  inline constexpr int kFinding = 1;
  inline constexpr int kUsage   = 2;

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace bsgraph::cli

#endif  // BSGRAPH_CLI_HPP_
