#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chow/integer.hpp"
#include "chow/polynomial.hpp"
#include "chow/ring_context.hpp"

namespace chow {

struct OracleDegree {
  int degree = 0;
  std::size_t rank = 0;           // free rank of the degree-d piece
  bool torsion_free = true;
  std::vector<Integer> torsion;   // invariant factors > 1
  std::size_t columns = 0;        // size of the presentation A^{d-1} x V
  std::size_t relations = 0;      // relation rows eliminated
};

/// Presents each graded piece of the ring by integer linear algebra, without
/// any use of straightening.
///
/// Degree d is the cokernel of the relations inside A^{d-1} (x) V, where V is
/// spanned by the generators: commutators [b x_i] (x) x_j - [b x_j] (x) x_i for
/// b in a basis of A^{d-2}, the quadratic relations in degree 2 and the linear
/// ones in degree 1. Higher multiples of the quadrics and linear forms follow
/// from these by commutation. Columns are split by the lattice grading (join
/// of the support, or meet for semilattices), which every relation respects.
/// Elimination uses unit pivots only; anything left over goes through a Smith
/// form, which detects torsion.
class RelationOracle {
 public:
  static constexpr std::size_t kDefaultColumnLimit = 400'000;

  explicit RelationOracle(RingContext ctx, std::size_t column_limit = kDefaultColumnLimit);

  const RingContext& context() const noexcept { return ctx_; }

  /// Builds all degrees up to d. Throws SizeLimit past the column limit.
  const OracleDegree& degree(int d);
  std::size_t rank(int d) { return degree(d).rank; }

  /// Coordinates of a homogeneous polynomial of degree d in the oracle basis
  /// of degree d. The zero polynomial needs `d` explicitly.
  std::vector<Integer> coordinates(const Polynomial& p, int d);
  std::vector<Integer> coordinates(const Monomial& m);

  /// Grading component and a monomial representative of basis element i.
  ElementId basis_component(int d, std::size_t i);
  const Monomial& basis_representative(int d, std::size_t i);

 private:
  using SparseVec = std::vector<std::pair<std::uint32_t, Integer>>;
  struct Level {
    std::vector<ElementId> component;
    std::vector<Monomial> representative;
    // Coordinates of basis[c] * generator j in the next level, at c * G + j.
    std::vector<SparseVec> mult;
  };

  void build_next();
  void multiply_into(const SparseVec& v, std::size_t level, int gen_pos, SparseVec& out) const;

  RingContext ctx_;
  std::size_t column_limit_;
  std::vector<Level> levels_;
  std::vector<OracleDegree> info_;
};

struct BasisCertificate {
  bool ok = true;
  std::string detail;
};

/// Checks that `monomials` (all of degree d) form a Z-basis of the degree-d
/// piece: one per basis element, and unimodular coordinate blocks.
BasisCertificate certify_basis(RelationOracle& oracle, std::span<const Monomial> monomials,
                               int d);

}  // namespace chow
