#pragma once

#include <stdexcept>
#include <string>

namespace tropkit {

// Violated precondition of a library operation (non-transverse curves,
// inadmissible twists, unbalanced fans, ...). The CLI maps it to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input. The CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropkit
