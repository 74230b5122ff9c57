#pragma once

#include <stdexcept>
#include <string>

namespace crg {

/// Base class for all errors thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The input does not satisfy an operation's stated hypothesis
/// (e.g. the graph is not omega-clique regular). The CLI maps this
/// to exit code 2.
struct hypothesis_error : error {
  using error::error;
};

/// Malformed text input. `line` is 1-based; 0 when no line applies.
struct parse_error : error {
  int line;
  explicit parse_error(const std::string& what, int line_number = 0)
      : error(line_number > 0 ? what + " (line " + std::to_string(line_number) + ")" : what),
        line(line_number) {}
};

/// An internal cross-check failed; indicates a bug, not bad input.
struct internal_error : error {
  using error::error;
};

}  // namespace crg
