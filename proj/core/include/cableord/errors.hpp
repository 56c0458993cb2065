#pragma once

#include <stdexcept>
#include <string>

namespace cableord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data is structurally malformed (duplicate arrows, unknown ids, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The homology conditions of a knot-like complex fail.
class NotKnotLike : public Error {
 public:
  using Error::Error;
};

/// No simultaneously horizontally and vertically simplified basis was found;
/// the curve would carry a nontrivial local system.
class LocalSystemRequired : public Error {
 public:
  using Error::Error;
};

/// A closed-form cabling rule does not cover the given arc / parameters.
class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure: an arc of length zero survived pulling tight.
class NotPulledTight : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class TrivialBase : public Error {
 public:
  using Error::Error;
};

class ExcludedBase : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed (direct vs. formula, rule vs. geometry).
class CheckMismatch : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed. `position` is a 0-based character offset when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cableord
