#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solidring {

/// A value outside the domain of an operation (composite "prime", invalid
/// classification data, enumeration guard exceeded, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace solidring
