#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wgalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

class IncompatibleFieldError : public Error {
 public:
  using Error::Error;
};

/// Syntax or validation error in textual input; `position` is a byte offset
/// into the parsed text (npos when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? message
                  : message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class GroupTooLargeError : public Error {
 public:
  GroupTooLargeError(std::size_t cap, std::size_t partial)
      : Error("group has more than " + std::to_string(cap) + " elements (enumerated " +
              std::to_string(partial) + " before stopping)"),
        partial_count_(partial) {}

  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

/// A path or relation does not fit under the saturation bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

class InconsistentProductError : public Error {
 public:
  using Error::Error;
};

class NotAProductError : public Error {
 public:
  using Error::Error;
};

class UnknownGeneratorError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (e.g. a defining relation does not vanish on
/// a validated module).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wgalg
