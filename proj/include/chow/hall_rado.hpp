#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chow/matroid.hpp"

namespace chow {

struct HallRadoResult {
  bool ok = true;
  /// On failure, positions (0-based) of a violating subset of least size.
  std::vector<std::size_t> witness;
};

/// rk(join of F_i, i in T) >= |T| for all T. Needs exactly rank(m) flats.
HallRadoResult hall_rado(const MatroidLattice& m, std::span<const FlatId> flats);

/// rk(join of F_i, i in T) >= |T| + 1 for all nonempty T. Needs rank(m) - 1
/// nonempty flats.
HallRadoResult dragon_hall_rado(const MatroidLattice& m, std::span<const FlatId> flats);

}  // namespace chow
