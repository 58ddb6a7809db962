#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "chow/matroid.hpp"
#include "chow/polynomial.hpp"

namespace chow {

enum class RingMode { augmented, reduced, semilattice };

std::string_view to_string(RingMode mode);

/// A lattice plus the choice of relation system. Generators are the nonempty
/// flats (matroid modes) or all semilattice elements.
class RingContext {
 public:
  static RingContext augmented(std::shared_ptr<const MatroidLattice> m);
  static RingContext reduced(std::shared_ptr<const MatroidLattice> m);
  static RingContext semilattice(std::shared_ptr<const MeetSemilattice> l);
  static RingContext make(RingMode mode, MatroidLattice m);
  static RingContext make(MeetSemilattice l);

  RingMode mode() const noexcept { return mode_; }
  bool is_matroid() const noexcept { return mode_ != RingMode::semilattice; }
  /// Throws ContextMismatch in semilattice mode.
  const MatroidLattice& matroid() const;
  std::shared_ptr<const MatroidLattice> matroid_ptr() const { return matroid_; }
  /// The underlying meet-semilattice; in matroid modes, the flat lattice.
  const MeetSemilattice& semilattice() const;

  /// Same lattice, other matroid mode.
  RingContext with_mode(RingMode mode) const;
  bool same_lattice(const RingContext& other) const noexcept;

  std::size_t element_count() const noexcept;
  const std::vector<GenId>& generators() const noexcept { return generators_; }
  bool is_generator(GenId g) const noexcept;
  /// Position of a generator in generators(), or -1.
  int generator_position(GenId g) const noexcept { return position_[g]; }

  /// Join in matroid modes, meet in semilattice mode.
  GenId combine(GenId x, GenId y) const noexcept;
  /// True when x lies between y and the combining direction's limit, i.e.
  /// x <= y for matroids and y <= x for semilattices.
  bool dominated_by(GenId x, GenId y) const noexcept;
  bool comparable(GenId x, GenId y) const noexcept;

  /// Highest nonzero degree: r (augmented), max(r - 1, 0) (reduced), none
  /// for semilattice rings.
  std::optional<int> top_degree() const noexcept;
  int rank_of(GenId g) const;

  /// Value used by component_of for the empty monomial in semilattice mode.
  ElementId unit_component() const noexcept;
  /// Join (matroid) or meet (semilattice) of the support; empty monomial maps
  /// to the empty flat, or to unit_component() for semilattices.
  ElementId component_of(const Monomial& m) const noexcept;
  ElementId combine_component(ElementId c, GenId g) const noexcept;

  /// Ideal generators of the presentation, each nonzero.
  std::vector<Polynomial> relations() const;

  /// Support is totally ordered.
  bool is_chain(const Monomial& m) const;
  /// Standard-monomial admission for this mode.
  bool is_standard(const Monomial& m) const;
  /// Throws UnknownFlat if a monomial uses a non-generator.
  void check_polynomial(const Polynomial& p) const;
  /// Parser hook: decimal indices, plus "E" for the top flat in matroid modes.
  GeneratorResolver resolver() const;

 private:
  RingContext() = default;
  void init_generators();

  RingMode mode_ = RingMode::augmented;
  std::shared_ptr<const MatroidLattice> matroid_;
  std::shared_ptr<const MeetSemilattice> lattice_;
  std::vector<GenId> generators_;
  std::vector<int> position_;
};

}  // namespace chow
