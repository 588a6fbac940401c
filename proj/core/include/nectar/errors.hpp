#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nectar {

/// Raised when an input file does not match its expected line format.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}

  std::size_t line;
};

}  // namespace nectar
