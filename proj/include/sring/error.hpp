#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sring {

enum class ErrorKind {
  kInvalidArgument,
  kParseError,
  kBoundExceeded,
  kMismatchedGroups,
  kNotPartition,
  kIdentityNotSingleton,
  kNotInverseClosed,
  kProductNotClosed,
  kSectionNotASection,
  kIncompatibleSection,
  kNotCoprime,
  kNotDivisor,
  kHNotASubgroup,
  kNotSubgroup,
  kNonBijective,
  kDoesNotContainRegular,
  kAutGroupTooLarge,
  kWrongGroupShape,
  kPrecondition,
  kInternal,
};

// Stable name used in JSON error reports ("NotInverseClosed", ...).
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sring
