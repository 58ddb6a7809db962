#include "chow/hall_rado.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "chow/error.hpp"

namespace chow {

namespace {

constexpr std::size_t kMaxFlats = 20;

HallRadoResult check(const MatroidLattice& m, std::span<const FlatId> flats, int slack) {
  const std::size_t r = flats.size();
  if (r > kMaxFlats) {
    throw Error(ErrorKind::SizeLimit, std::to_string(r) + " flats exceed the subset-search limit");
  }
  for (FlatId f : flats) {
    if (f >= m.size()) throw Error(ErrorKind::UnknownFlat, "flat " + std::to_string(f));
  }
  const std::uint32_t count = std::uint32_t{1} << r;
  std::vector<FlatId> join(count, m.bottom());
  HallRadoResult out;
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    join[mask] = m.join(join[mask & (mask - 1)], flats[static_cast<std::size_t>(low)]);
    const int size = std::popcount(mask);
    if (m.rank(join[mask]) < size + slack && (best == 0 || size < best_size)) {
      best = mask;
      best_size = size;
    }
  }
  if (best != 0) {
    out.ok = false;
    for (std::size_t i = 0; i < r; ++i) {
      if ((best >> i) & 1U) out.witness.push_back(i);
    }
  }
  return out;
}

}  // namespace

HallRadoResult hall_rado(const MatroidLattice& m, std::span<const FlatId> flats) {
  if (flats.size() != static_cast<std::size_t>(m.rank())) {
    throw Error(ErrorKind::SizeMismatch, "Hall-Rado needs " + std::to_string(m.rank()) +
                                             " flats, got " + std::to_string(flats.size()));
  }
  return check(m, flats, 0);
}

HallRadoResult dragon_hall_rado(const MatroidLattice& m, std::span<const FlatId> flats) {
  if (m.rank() == 0 || flats.size() != static_cast<std::size_t>(m.rank() - 1)) {
    throw Error(ErrorKind::SizeMismatch,
                "dragon-Hall-Rado needs " + std::to_string(m.rank() - 1) + " flats, got " +
                    std::to_string(flats.size()));
  }
  for (FlatId f : flats) {
    if (f == m.bottom()) throw Error(ErrorKind::InvalidFlat, "the empty flat is not allowed");
  }
  return check(m, flats, 1);
}

}  // namespace chow
