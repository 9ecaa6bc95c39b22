#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arclabel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input geometry has no usable extent (all points collinear, too few
/// distinct points, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// The reference center lies on the segment being boxed.
class DegenerateSegment : public Error {
 public:
  using Error::Error;
};

/// No skeleton edge survives containment filtering; the area is too small
/// or too thin to carry a label.
class EmptySkeleton : public Error {
 public:
  using Error::Error;
};

class HeightExceedsDiameter : public Error {
 public:
  using Error::Error;
};

/// A ring or area violates its invariants. The message names the ring.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `line` and `column` are 1-based; `offset` is
/// the byte offset reported by the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column,
             std::size_t offset)
      : Error(what), line_(line), column_(column), offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::size_t offset_;
};

}  // namespace arclabel
