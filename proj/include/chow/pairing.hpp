#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chow/integer.hpp"
#include "chow/linalg.hpp"
#include "chow/polynomial.hpp"
#include "chow/ring_context.hpp"
#include "chow/straighten.hpp"

namespace chow {

/// Essential flats of a standard monomial: extend its chain to a maximal
/// chain (always through the smallest-index admissible cover), drop the a_j
/// flats directly below each F_j, then drop E. Ascending. May contain the
/// empty flat. Throws NotStandard.
std::vector<FlatId> essential_flats(const RingContext& ctx, const Monomial& m);

/// d(m): product of x_G over the essential flats (the empty flat is skipped
/// in reduced mode), straightened with `ring`.
Polynomial dual_element(Straightener& ring, const Monomial& m);

struct PairingReport {
  int degree = 0;
  std::vector<Monomial> rows;                  // standard monomials, canonical order
  std::vector<std::vector<FlatId>> col_duals;  // essential flats behind each column
  IntMatrix matrix;                            // (i, j) = deg(rows[i] * d(rows[j]))
  bool lower_triangular_unit = false;
  bool delta_order_ok = false;  // nonzero (i, j), i != j, has delta(rows[i]) > delta(rows[j])
  std::vector<std::string> violations;
  std::optional<Integer> full_pairing_det;
};

/// Throws DegreeOutOfRange unless 0 <= k <= top degree.
PairingReport pairing_matrix(const RingContext& ctx, int k, bool with_full_pairing = true);

/// deg(m_i * m'_j) for standard monomials of degrees k and top - k.
IntMatrix full_pairing(const RingContext& ctx, int k);

/// {"degree","rows","matrix","lower_triangular_unit","full_pairing_det"}.
std::string to_json(const PairingReport& report);

struct TheoremCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool ok() const;
};

/// Standard basis against the linear-algebra oracle, degree well-definedness,
/// triangular pairing and unimodular duality in every degree, and a
/// palindromic Hilbert series.
TheoremReport verify_theorems(const RingContext& ctx);

}  // namespace chow
