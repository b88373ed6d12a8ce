#include "icat/error.hpp"

namespace icat {

std::string_view kindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotMono: return "NotMono";
    case ErrorKind::NotEpi: return "NotEpi";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NotInHomSet: return "NotInHomSet";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NotFullMono: return "NotFullMono";
    case ErrorKind::NotBiSieve: return "NotBiSieve";
    case ErrorKind::NotFFEpi: return "NotFFEpi";
    case ErrorKind::FiberNotSingleton: return "FiberNotSingleton";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kindName(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace icat
