#pragma once

#include <stdexcept>
#include <string>

namespace primal {

namespace detail {
inline std::string located(const std::string& msg, int line, int col) {
  if (line <= 0) return msg;
  std::string s = "line " + std::to_string(line);
  if (col > 0) s += ", col " + std::to_string(col);
  return s + ": " + msg;
}
}  // namespace detail

// Input text could not be assembled into a presentation, automaton, word or
// element. line/col are 1-based; 0 means "not applicable".
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg, int line = 0, int col = 0)
      : std::runtime_error(detail::located(msg, line, col)), line(line), col(col) {}
  int line;
  int col;
};

// A precondition of an operation was violated: rejected word, zero element,
// mismatched algebras, automaton not factor-closed, and so on.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded before the computation finished.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace primal
