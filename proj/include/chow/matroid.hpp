#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chow/poset.hpp"

namespace chow {

/// Index of a flat inside one specific MatroidLattice.
using FlatId = ElementId;

/// Raw input to validate_matroid: an order, a rank per element and optional
/// ground-set labels (sorted element lists, possibly empty).
struct CandidateLattice {
  Poset order;
  std::vector<int> rank;
  std::vector<std::vector<int>> ground_labels;
};

/// Validated lattice of flats of a matroid.
///
/// Flats are indexed canonically by (rank, sorted ground labels, construction
/// order), so index 0 is always the empty flat and the last index is E.
class MatroidLattice {
 public:
  const MeetSemilattice& lattice() const noexcept { return lattice_; }
  const Poset& poset() const noexcept { return lattice_.poset(); }
  std::size_t size() const noexcept { return lattice_.size(); }

  FlatId bottom() const noexcept { return 0; }
  FlatId top() const noexcept { return static_cast<FlatId>(size() - 1); }
  int rank() const noexcept { return rank_.back(); }
  int rank(FlatId f) const noexcept { return rank_[f]; }

  bool leq(FlatId a, FlatId b) const noexcept { return lattice_.leq(a, b); }
  bool less(FlatId a, FlatId b) const noexcept { return lattice_.less(a, b); }
  FlatId meet(FlatId a, FlatId b) const noexcept { return lattice_.meet(a, b); }
  FlatId join(FlatId a, FlatId b) const noexcept {
    return join_[static_cast<std::size_t>(a) * size() + b];
  }
  std::span<const FlatId> covers(FlatId f) const noexcept { return lattice_.covers(f); }
  std::span<const FlatId> atoms() const noexcept { return atoms_; }
  bool is_atom(FlatId f) const noexcept { return rank_[f] == 1; }

  /// Flats of a given rank, ascending.
  std::vector<FlatId> flats_of_rank(int r) const;

  const std::vector<int>& ground_labels(FlatId f) const noexcept { return labels_[f]; }
  /// "{0,2}" from ground labels, or "#i" for unlabeled abstract flats.
  std::string flat_name(FlatId f) const;

 private:
  friend struct MatroidBuilder;

  MeetSemilattice lattice_;
  std::vector<std::uint16_t> join_;
  std::vector<int> rank_;
  std::vector<FlatId> atoms_;
  std::vector<std::vector<int>> labels_;
};

/// Full validation: lattice, ranked, atomic, submodular. Elements are
/// renumbered into canonical order.
MatroidLattice validate_matroid(CandidateLattice candidate);

/// Builds the tables without the atomic/submodular checks in release
/// builds. Used for minors, whose structure is inherited.
MatroidLattice trusted_matroid(CandidateLattice candidate);

/// Flats given as subsets of {0..ground_size-1}; the order is inclusion and
/// ranks are chain lengths from the empty flat.
MatroidLattice matroid_from_flats(int ground_size, std::vector<std::vector<int>> flats);

MatroidLattice boolean_matroid(int n);
MatroidLattice uniform_matroid(int r, int n);
MatroidLattice graphic_matroid(int vertices, std::span<const std::pair<int, int>> edges);

/// A minor together with the flat correspondence to its parent.
struct MinorMap {
  MatroidLattice matroid;
  std::vector<FlatId> to_parent;                  // child flat -> parent flat
  std::vector<std::optional<FlatId>> from_parent;  // parent flat -> child flat
};

/// M^F: the interval [empty, F].
MinorMap restriction_map(const MatroidLattice& m, FlatId f);
/// M_G: the interval [G, E] with ranks shifted so that G has rank 0.
MinorMap contraction_map(const MatroidLattice& m, FlatId g);
/// Tr M: corank-one flats removed.
MinorMap truncation_map(const MatroidLattice& m);

inline MatroidLattice restriction(const MatroidLattice& m, FlatId f) {
  return restriction_map(m, f).matroid;
}
inline MatroidLattice contraction(const MatroidLattice& m, FlatId g) {
  return contraction_map(m, g).matroid;
}
inline MatroidLattice truncation(const MatroidLattice& m) { return truncation_map(m).matroid; }

/// Brute-force search for a pair violating submodularity.
std::optional<std::pair<FlatId, FlatId>> find_submodularity_violation(const MatroidLattice& m);

/// The inverse of validation: order, ranks and labels of an existing matroid.
CandidateLattice as_candidate(const MatroidLattice& m);

}  // namespace chow
