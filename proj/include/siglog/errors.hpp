#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace siglog {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Signature value violates a structural invariant.
class InvalidSignature : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a ground signature received one with wildcards
/// or an EquivIn head.
class NotGround : public Error {
 public:
  using Error::Error;
};

/// Malformed normalized-signature text. `offset` is the first byte at which
/// no continuation of the grammar exists.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found)
      : Error("at byte " + std::to_string(offset) + ": expected " + expected +
              ", found " + found),
        offset_(offset),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

/// The whole-list wildcard `?` was mixed with explicit parameters.
class MixedWildcardParams : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Malformed raw signature for a given dialect.
class DialectParseError : public Error {
 public:
  DialectParseError(std::string dialect, std::size_t offset,
                    const std::string& message)
      : Error(dialect + " signature at byte " + std::to_string(offset) + ": " +
              message),
        dialect_(std::move(dialect)),
        offset_(offset) {}

  const std::string& dialect() const { return dialect_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string dialect_;
  std::size_t offset_;
};

/// Wildcard syntax found in text that is being normalized for storage.
class NotGroundAfterNormalize : public Error {
 public:
  using Error::Error;
};

class UnsupportedHead : public Error {
 public:
  using Error::Error;
};

class NotEquivHead : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// The source half of an EquivIn query matched no stored function.
class SourceNotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace siglog
