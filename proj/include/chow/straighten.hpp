#pragma once

#include <cstdint>
#include <unordered_map>

#include "chow/polynomial.hpp"
#include "chow/ring_context.hpp"

namespace chow {

/// Rewrites polynomials onto the standard monomial basis of a ring context.
///
/// Normal forms are memoized per monomial, so one Straightener should be
/// reused for many calls against the same context. Not thread-safe; use one
/// instance per thread.
class Straightener {
 public:
  static constexpr std::uint64_t kDefaultStepLimit = 10'000'000;

  explicit Straightener(RingContext ctx, std::uint64_t step_limit = kDefaultStepLimit);

  const RingContext& context() const noexcept { return ctx_; }

  Polynomial straighten(const Polynomial& p);
  const Polynomial& normal_form(const Monomial& m);

  /// Pair rewrites performed so far (all calls).
  std::uint64_t steps() const noexcept { return steps_; }
  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  Polynomial compute(const Monomial& m);
  Polynomial reduce_chain(const Monomial& m) const;

  RingContext ctx_;
  std::uint64_t step_limit_;
  std::uint64_t steps_ = 0;
  std::unordered_map<Monomial, Polynomial, MonomialHash> memo_;
};

/// One-shot convenience; throws UnknownFlat on non-generators.
Polynomial straighten(const RingContext& ctx, const Polynomial& p);

}  // namespace chow
