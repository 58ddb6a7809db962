#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chow {

enum class ErrorKind {
  CycleDetected,
  NotASemilattice,
  NotALattice,
  NotRanked,
  NotAtomic,
  NotSubmodular,
  SizeLimit,
  InvalidParams,
  RankZero,
  NotHomogeneous,
  SizeMismatch,
  InvalidFlat,
  NotStandard,
  DegreeOutOfRange,
  EmptyFlat,
  ContextMismatch,
  ParseError,
  UnknownFlat,
  InputFormat,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the named kinds above;
/// the message starts with the kind's name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// True for the kinds that report a violated mathematical axiom of the input
/// (as opposed to a malformed request).
bool is_validation_failure(ErrorKind kind);

}  // namespace chow
