#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested coefficient lies outside the known window of a truncated
// series, or a p-adic division could not be carried out exactly.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Violated precondition: division by zero, mismatched fields or lengths,
// parameters outside the supported range.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace asw
