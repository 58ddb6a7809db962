#pragma once

#include <vector>

#include "chow/integer.hpp"
#include "chow/polynomial.hpp"
#include "chow/ring_context.hpp"

namespace chow {

/// Cumulative exponents by rank: component j-1 sums the exponents of flats of
/// rank <= j, for j = 1..r.
std::vector<int> delta(const RingContext& ctx, const Monomial& m);

/// Canonical total order: delta lexicographically, then the factor list.
/// Semilattice rings use the factor list only.
bool canonical_less(const RingContext& ctx, const Monomial& a, const Monomial& b);

/// All standard monomials of degree d, in canonical order.
std::vector<Monomial> standard_monomials(const RingContext& ctx, int d);

/// Standard monomials per degree 0..top_degree (matroid modes only).
std::vector<Integer> hilbert_series(const RingContext& ctx);

/// Chain-monomial counts of a semilattice ring for degrees 0..d_max, computed
/// from the chain counts of the underlying poset.
std::vector<Integer> series_truncated(const RingContext& ctx, int d_max);

}  // namespace chow
