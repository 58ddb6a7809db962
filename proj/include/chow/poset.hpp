#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chow/integer.hpp"

namespace chow {

/// Dense identifier of a poset element, 0..size-1.
using ElementId = std::uint32_t;

/// Upper bound on the number of elements of any poset handled by the library.
inline constexpr std::size_t kMaxPosetSize = 4096;

/// Finite partial order stored as two dense bit tables (down-sets and
/// up-sets), so comparability is O(1). Immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Transitive closure of `relations` (pairs (x, y) meaning x <= y).
  /// Throws CycleDetected when the closure is not antisymmetric.
  static Poset from_relations(std::size_t size,
                              std::span<const std::pair<ElementId, ElementId>> relations);

  /// Builds from a complete comparability predicate and validates
  /// reflexivity, antisymmetry and transitivity.
  template <class Leq>
  static Poset from_predicate(std::size_t size, Leq&& leq) {
    Poset p(size);
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        if (x == y || leq(static_cast<ElementId>(x), static_cast<ElementId>(y))) {
          p.set(static_cast<ElementId>(x), static_cast<ElementId>(y));
        }
      }
    }
    p.validate();
    return p;
  }

  std::size_t size() const noexcept { return size_; }

  bool leq(ElementId x, ElementId y) const noexcept {
    return (down_[row(y) + x / 64] >> (x % 64)) & 1U;
  }
  bool less(ElementId x, ElementId y) const noexcept { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const noexcept { return leq(x, y) || leq(y, x); }

  /// Bit row of {z : z <= x}.
  std::span<const std::uint64_t> down_set(ElementId x) const noexcept {
    return {down_.data() + row(x), words_};
  }
  /// Bit row of {z : x <= z}.
  std::span<const std::uint64_t> up_set(ElementId x) const noexcept {
    return {up_.data() + row(x), words_};
  }
  std::size_t words() const noexcept { return words_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Element `i` of the result is element `order[i]` of this poset.
  Poset reindexed(std::span<const ElementId> order) const;
  Poset opposite() const;
  /// Induced order on the listed elements, in the listed order.
  Poset induced(std::span<const ElementId> elements) const;

  /// Minimal / maximal elements.
  std::vector<ElementId> minimal_elements() const;
  std::vector<ElementId> maximal_elements() const;

  bool operator==(const Poset& other) const {
    return size_ == other.size_ && down_ == other.down_;
  }

 private:
  explicit Poset(std::size_t size);

  std::size_t row(ElementId x) const noexcept { return static_cast<std::size_t>(x) * words_; }
  void set(ElementId x, ElementId y);  // records x <= y
  void validate() const;
  void rebuild_up();

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> up_;
  std::vector<std::string> labels_;
};

/// A poset in which every pair has a greatest lower bound.
class MeetSemilattice {
 public:
  MeetSemilattice() = default;

  /// Throws NotASemilattice naming a pair without a unique greatest lower
  /// bound.
  static MeetSemilattice from_poset(Poset poset);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  bool leq(ElementId x, ElementId y) const noexcept { return poset_.leq(x, y); }
  bool less(ElementId x, ElementId y) const noexcept { return poset_.less(x, y); }
  ElementId bottom() const noexcept { return bottom_; }
  ElementId meet(ElementId x, ElementId y) const noexcept {
    return meet_[static_cast<std::size_t>(x) * size() + y];
  }
  /// Elements covering x: minimal among those strictly above x.
  std::span<const ElementId> covers(ElementId x) const noexcept { return covers_[x]; }

 private:
  Poset poset_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::vector<ElementId>> covers_;
  ElementId bottom_ = 0;
};

inline Poset build_poset(std::span<const std::pair<ElementId, ElementId>> relations,
                         std::size_t size) {
  return Poset::from_relations(size, relations);
}

inline MeetSemilattice as_meet_semilattice(const Poset& p) {
  return MeetSemilattice::from_poset(p);
}

inline std::span<const ElementId> covers(const MeetSemilattice& s, ElementId x) {
  return s.covers(x);
}

/// Cover lists of an arbitrary poset.
std::vector<std::vector<ElementId>> cover_relation(const Poset& p);

/// Chain counts of the order complex. f_vector[k] is the number of chains
/// with k elements; f_vector[0] = 1 counts the empty chain.
struct ChainComplexStats {
  std::vector<Integer> f_vector;
};

ChainComplexStats chain_f_vector(const Poset& p);

/// Greatest lower bound of x and y, or `p.size()` when the common lower
/// bounds have no maximum. `down_counts[z]` is |{w : w <= z}|. Applied to the
/// opposite poset it yields least upper bounds.
ElementId greatest_lower_bound(const Poset& p, ElementId x, ElementId y,
                               std::span<const std::size_t> down_counts);

}  // namespace chow
