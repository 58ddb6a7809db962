#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chow {

/// Arbitrary-precision integer used for every coefficient.
using Integer = mpz_class;

/// Converts to int64, throwing Internal if the value does not fit.
std::int64_t to_int64(const Integer& value);

inline std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace chow
