#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <unordered_map>
#include <utility>

#include "chow/integer.hpp"
#include "chow/matroid.hpp"
#include "chow/polynomial.hpp"
#include "chow/report.hpp"
#include "chow/ring_context.hpp"
#include "chow/straighten.hpp"

namespace chow {

/// The degree map of an augmented or reduced Chow ring: a monomial of top
/// degree maps to 1 when its flat multiset satisfies the Hall-Rado
/// (augmented) or dragon-Hall-Rado (reduced) condition, else to 0. Other
/// degrees map to 0. Results are cached per monomial.
class DegreeMap {
 public:
  explicit DegreeMap(RingContext ctx);

  const RingContext& context() const noexcept { return ctx_; }
  int top_degree() const noexcept { return top_; }

  int monomial(const Monomial& m);
  /// Throws NotHomogeneous for mixed degrees.
  Integer operator()(const Polynomial& p);

 private:
  RingContext ctx_;
  int top_;
  std::unordered_map<Monomial, int, MonomialHash> cache_;
};

/// Throw ContextMismatch unless ctx has the matching mode.
Integer degree_aug(const RingContext& ctx, const Polynomial& p);
Integer degree_red(const RingContext& ctx, const Polynomial& p);

/// Checks deg(relation * monomial) = 0 for every defining relation and every
/// free monomial of complementary degree. Above `sample_limit` products the
/// monomials are drawn at random from `seed` instead.
CheckReport verify_degree_welldefined(const RingContext& ctx,
                                      std::size_t sample_limit = 2'000'000,
                                      std::uint64_t seed = 1);

/// x_G = -sum over subsets S of the atoms outside G of (-1)^|S| h_{G v S},
/// with h_empty = 0. G must be proper, and nonempty in reduced mode.
Polynomial x_element(const RingContext& ctx, FlatId g);

/// Elements of A(M^G) (x) A_red(M_G): pairs of monomials with coefficients.
using Tensor = std::map<std::pair<Monomial, Monomial>, Integer>;

std::string to_string(const Tensor& t);

/// phi_G: h_F -> h_F (x) 1 when F <= G, and 1 (x) h_{F v G} otherwise. The
/// left factor has the mode of the source ring, the right one is reduced.
class PhiMap {
 public:
  PhiMap(const RingContext& ctx, FlatId g);

  FlatId flat() const noexcept { return g_; }
  const RingContext& source() const noexcept { return source_; }
  const RingContext& left() const noexcept { return left_.context(); }
  const RingContext& right() const noexcept { return right_.context(); }
  const MinorMap& restriction() const noexcept { return restriction_; }
  const MinorMap& contraction() const noexcept { return contraction_; }

  /// Image with both factors straightened.
  Tensor apply(const Polynomial& p);
  Tensor multiply(const Tensor& a, const Tensor& b);
  /// Product of the two factor degree maps.
  Integer degree(const Tensor& t);

 private:
  void add_normalized(const Monomial& l, const Monomial& r, const Integer& c, Tensor& out);

  RingContext source_;
  FlatId g_;
  MinorMap restriction_;
  MinorMap contraction_;
  Straightener left_;
  Straightener right_;
  DegreeMap left_degree_;
  DegreeMap right_degree_;
};

/// straighten(x_G * g) = 0 for the kernel generators h_F (F covers G) and
/// h_H - h_K (H, K not below G, H v G = K v G).
CheckReport verify_annihilator(const RingContext& ctx, FlatId g);

struct ProjectionCheck {
  Integer tensor_side;   // deg(phi_G(y))
  Integer product_side;  // deg(x_G * y)
  bool ok() const { return tensor_side == product_side; }
};

ProjectionCheck verify_projection_formula(const RingContext& ctx, FlatId g, const Polynomial& y);
/// Same, reusing the caller's maps; `ring` must straighten in phi.source().
ProjectionCheck verify_projection_formula(PhiMap& phi, Straightener& ring, DegreeMap& degree,
                                          const Polynomial& x_g, const Polynomial& y);

/// Homogeneous polynomial with `terms` random monomials in the generators and
/// coefficients in [-3, 3].
Polynomial random_homogeneous(const RingContext& ctx, int degree, std::size_t terms,
                              std::mt19937_64& rng);

}  // namespace chow
