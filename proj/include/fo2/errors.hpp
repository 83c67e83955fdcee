#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fo2 {

/// Raised when text in one of the input formats (word, ranker, formula,
/// DIMACS) cannot be parsed.  `offset()` is the 0-based character offset of
/// the offending token where one exists.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownLetter, Signature, Variable };

  ParseError(Kind kind, std::size_t offset, const std::string& message)
      : std::runtime_error(message), kind_(kind), offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// An enumeration or search hit its configured cap.  Never a silent
/// truncation: callers either raise the cap or report the failure.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap, std::size_t limit)
      : std::runtime_error(cap + " exceeded (limit " + std::to_string(limit) + ")"),
        cap_(std::move(cap)),
        limit_(limit) {}

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::size_t limit_;
};

}  // namespace fo2
