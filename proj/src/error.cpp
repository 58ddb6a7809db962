#include "chow/error.hpp"

namespace chow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotASemilattice: return "NotASemilattice";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotRanked: return "NotRanked";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::NotSubmodular: return "NotSubmodular";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidFlat: return "InvalidFlat";
    case ErrorKind::NotStandard: return "NotStandard";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::EmptyFlat: return "EmptyFlat";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownFlat: return "UnknownFlat";
    case ErrorKind::InputFormat: return "InputFormat";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

bool is_validation_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected:
    case ErrorKind::NotASemilattice:
    case ErrorKind::NotALattice:
    case ErrorKind::NotRanked:
    case ErrorKind::NotAtomic:
    case ErrorKind::NotSubmodular:
      return true;
    default:
      return false;
  }
}

}  // namespace chow

#include "chow/integer.hpp"

namespace chow {

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorKind::Internal, "integer " + value.get_str() + " exceeds 64 bits");
  }
  return value.get_si();
}

}  // namespace chow
