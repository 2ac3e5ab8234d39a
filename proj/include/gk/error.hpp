#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gk {

enum class ErrorKind {
  input,                  // malformed or out-of-range input
  precondition,           // operation called outside its domain
  not_member,             // graph is not in the class the operation requires
  budget_exceeded,        // exact search ran out of nodes
  internal_contradiction  // a proven structural statement failed on a verified input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::input, what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void throw_input(const std::string& what) { throw Error(ErrorKind::input, what); }
[[noreturn]] inline void throw_precondition(const std::string& what) { throw Error(ErrorKind::precondition, what); }
[[noreturn]] inline void throw_contradiction(const std::string& what) {
  throw Error(ErrorKind::internal_contradiction, what);
}

}  // namespace gk
