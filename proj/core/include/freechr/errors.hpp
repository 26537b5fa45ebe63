#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace freechr {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid program construction: empty heads, empty names, duplicate rule
/// names in a composition.
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// A match (or a set of occurrence indices) does not fit the state it is
/// applied to: out-of-range index, duplicated occurrence, stale values.
class MatchError : public Error {
public:
  using Error::Error;
};

/// A user-supplied head predicate, guard or body raised an exception.
class DomainFunctionError : public Error {
public:
  DomainFunctionError(const std::string& rule, const std::string& fn,
                      const std::string& reason)
      : Error("rule '" + rule + "': function '" + fn + "' failed: " + reason) {}
};

/// Placeholder substitution in a rule embedding referenced a variable that
/// does not exist.
class EmbedError : public Error {
public:
  using Error::Error;
};

/// State-literal syntax error; position is a byte offset into the literal.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace freechr
