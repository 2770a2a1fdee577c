#pragma once

#include <stdexcept>
#include <string>

namespace groupfact {

// Bad caller input: wrong degrees, violated preconditions.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured size bound would be exceeded.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the offending line (1-based, 0 if none).
struct ParseError : std::runtime_error {
  ParseError(std::string const &path, std::size_t line, std::string const &what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
      line(line)
  {}
  std::size_t line;
};

// Something that must hold by construction did not.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace groupfact
