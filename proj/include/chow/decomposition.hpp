#pragma once

#include <map>
#include <vector>

#include "chow/integer.hpp"
#include "chow/polynomial.hpp"
#include "chow/report.hpp"
#include "chow/ring_context.hpp"

namespace chow {

struct GradedPiece {
  FlatId flat;
  Polynomial component;  // every monomial's support joins to `flat`
};

/// Straightens p and splits its terms by the join of their support.
/// Pieces are ordered by flat.
std::vector<GradedPiece> split_by_flat(const RingContext& ctx, const Polynomial& p);

/// Number of standard monomials in each degree 0..top whose support joins to
/// F. Throws EmptyFlat for the empty flat.
std::vector<Integer> piece_dimensions(const RingContext& ctx, FlatId f);

/// Hilbert series of the augmented ring of Tr(M^F), shifted up by one.
std::vector<Integer> truncated_restriction_series(const MatroidLattice& m, FlatId f);

/// Element of the graded Moebius algebra: coefficients on the basis y_F.
using MobiusElement = std::map<FlatId, Integer>;

/// y_F y_G = y_{F v G} when ranks add, else 0.
MobiusElement mobius_multiply(const MatroidLattice& m, const MobiusElement& u,
                              const MobiusElement& v);

/// Sum over F of the piece dimensions against the Hilbert series, top piece
/// spanned by h_F^{rk F}, and (augmented) agreement with Tr(M^F).
CheckReport verify_decomposition(const RingContext& ctx);

/// h_F^{rk F} h_G^{rk G} against the Moebius product for all pairs, and atom
/// products h_{a_1}...h_{a_k} against y_{a_1}...y_{a_k}. Augmented only.
CheckReport verify_mobius_embedding(const RingContext& ctx);

/// H_M = 1 + t sum_{F nonempty} H_{Tr M^F} (augmented), and
/// H_M = 1 + t sum_{rk F >= 2} H_{Tr M^F} (reduced).
CheckReport verify_hilbert_recursion(const RingContext& ctx);

}  // namespace chow
