#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

/// Input that violates a documented precondition (bad graph, bad flag, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 / edge-list text. `offset` is the byte position of the
/// first offending character.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : ValidationError(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A size cap (pattern vertices, host vertices, brute-force n) was exceeded.
class UnsupportedSize : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A result failed its own re-verification. Never caused by valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace turan
