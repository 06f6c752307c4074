#pragma once

#include <stdexcept>
#include <string>

namespace mapsym {

// Raised when an input violates a structural precondition (malformed
// involutions, disconnected rotation systems, invalid parameters, ...).
class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text readers; carries the source name and 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

}  // namespace mapsym
