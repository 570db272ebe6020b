#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pospart {

enum class ErrorKind {
  DimensionMismatch,
  InvalidFlag,
  PreconditionViolated,
  GuardExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module. Internal consistency failures use
/// std::logic_error instead so they are never confused with bad input.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void throw_error(ErrorKind kind, const std::string &message);

void require_rank(std::size_t expected, std::size_t actual,
                  std::string_view what);

} // namespace pospart
