#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "solidring/arith.hpp"
#include "solidring/errors.hpp"

namespace solidring {

/// Cursor over input text shared by the recursive-descent parsers.
/// Whitespace is insignificant between tokens; every error carries the byte
/// offset where it was detected.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  /// Consumes `token` if the upcoming input starts with it (after whitespace).
  bool try_consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_).substr(0, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!try_consume(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Nat parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Nat(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Int parse_int() {
    skip_ws();
    bool neg = try_consume("-");
    Int v = parse_nat();
    return neg ? Int(-v) : v;
  }

  /// A natural number verified to be prime; reports the number's own position
  /// on failure.
  Nat parse_prime() {
    skip_ws();
    std::size_t start = pos_;
    Nat n = parse_nat();
    if (!is_prime(n)) throw ParseError(start, n.get_str() + " is not prime");
    return n;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_ws();
    throw ParseError(pos_, message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace solidring
