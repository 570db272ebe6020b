#include "pospart/error.hpp"

namespace pospart {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::DimensionMismatch:
    return "DimensionMismatch";
  case ErrorKind::InvalidFlag:
    return "InvalidFlag";
  case ErrorKind::PreconditionViolated:
    return "PreconditionViolated";
  case ErrorKind::GuardExceeded:
    return "GuardExceeded";
  case ErrorKind::InvalidArgument:
    return "InvalidArgument";
  }
  return "Unknown";
}

void throw_error(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

void require_rank(std::size_t expected, std::size_t actual,
                  std::string_view what) {
  if (expected != actual)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": expected rank " +
                    std::to_string(expected) + ", got " +
                    std::to_string(actual));
}

} // namespace pospart
