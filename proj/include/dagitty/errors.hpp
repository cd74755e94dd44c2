#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dagitty {

/// Base of every error raised by the library. Parse-time errors carry the
/// 1-based line number of the offending model-code line.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}

  std::optional<std::size_t> line() const noexcept { return line_; }
  virtual const char* kind() const noexcept { return "Error"; }

 private:
  std::optional<std::size_t> line_;
};

#define DAGITTY_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  }

DAGITTY_DEFINE_ERROR(NameCollision);
DAGITTY_DEFINE_ERROR(UnknownVariable);
DAGITTY_DEFINE_ERROR(UndeclaredVariable);
DAGITTY_DEFINE_ERROR(CycleError);
DAGITTY_DEFINE_ERROR(SelfLoopError);
DAGITTY_DEFINE_ERROR(SyntaxError);
DAGITTY_DEFINE_ERROR(InvalidQuery);
DAGITTY_DEFINE_ERROR(MissingRoles);
DAGITTY_DEFINE_ERROR(OverlappingRoles);
DAGITTY_DEFINE_ERROR(MultipleRoles);
DAGITTY_DEFINE_ERROR(TooLarge);
DAGITTY_DEFINE_ERROR(Cancelled);

#undef DAGITTY_DEFINE_ERROR

}  // namespace dagitty
