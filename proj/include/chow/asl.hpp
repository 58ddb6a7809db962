#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chow/matroid.hpp"
#include "chow/polynomial.hpp"
#include "chow/poset.hpp"
#include "chow/ring_context.hpp"

namespace chow {

struct ASLCheckReport {
  bool axiom1_ok = true;  // chain monomials are a Z-basis through d_max
  bool axiom2_ok = true;  // h_x h_y straightens through a common strict lower bound
  bool nzd_ok = true;     // multiplication by h_0 is injective and saturated
  std::vector<std::string> details;

  bool ok() const noexcept { return axiom1_ok && axiom2_ok && nzd_ok; }
};

/// Degreewise checks of B(L) through d_max. Throws SizeLimit past 50
/// elements or degree 6.
ASLCheckReport check_asl(const MeetSemilattice& l, int d_max = 4);

/// Multiplication by h_0 from degree d to d + 1, for d < d_max, has a
/// saturated matrix of full column rank in the oracle bases.
bool check_nonzerodivisor(const MeetSemilattice& l, int d_max, std::string* detail = nullptr);

/// The nonempty flats of a matroid with the reversed order.
struct InvertedFlatPoset {
  std::shared_ptr<const MatroidLattice> matroid;
  MeetSemilattice lattice;
  std::vector<FlatId> flat_of;  // element -> flat
};

InvertedFlatPoset inverted_flat_poset(const MatroidLattice& m);

/// Sends h_x to h_F for the flat F behind x and straightens in `target`,
/// which must be a matroid ring on the same flats.
Polynomial quotient_to_chow(const InvertedFlatPoset& l, const RingContext& target,
                            const Polynomial& p);

/// All meet-semilattices with 1..max_size elements up to isomorphism, each
/// naturally labelled. max_size <= 6.
std::vector<MeetSemilattice> enumerate_semilattices(int max_size);

}  // namespace chow
