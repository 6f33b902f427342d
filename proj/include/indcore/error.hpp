#pragma once

#include <stdexcept>
#include <string>

namespace indcore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class NotChordal : public Error {
 public:
  NotChordal() : Error("input graph is not chordal") {}
  using Error::Error;
};

/// A hard size limit (isomorphism cap, face budget, enumeration bound) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace indcore
