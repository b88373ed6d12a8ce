#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icat {

enum class ErrorKind {
  DomainMismatch,
  ShapeMismatch,
  NotMono,
  NotEpi,
  SizeBound,
  NotInHomSet,
  NotInClass,
  NonCommuting,
  NotFullMono,
  NotBiSieve,
  NotFFEpi,
  FiberNotSingleton,
  ParseError,
  ValidationError,
};

std::string_view kindName(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace icat
