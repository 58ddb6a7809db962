#include "chow/standard_monomials.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

std::vector<int> delta(const RingContext& ctx, const Monomial& m) {
  const auto& mat = ctx.matroid();
  std::vector<int> out(static_cast<std::size_t>(mat.rank()), 0);
  for (const auto& f : m.factors()) {
    for (int j = std::max(mat.rank(f.gen), 1); j <= mat.rank(); ++j) {
      out[static_cast<std::size_t>(j - 1)] += static_cast<int>(f.exp);
    }
  }
  return out;
}

bool canonical_less(const RingContext& ctx, const Monomial& a, const Monomial& b) {
  if (ctx.is_matroid()) {
    auto da = delta(ctx, a);
    auto db = delta(ctx, b);
    if (da != db) return da < db;
  }
  return a < b;
}

namespace {

void extend_matroid(const RingContext& ctx, std::vector<Factor>& chain, int remaining,
                    std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::from_factors(chain));
    return;
  }
  const auto& m = ctx.matroid();
  const bool first = chain.empty();
  const FlatId last = first ? m.bottom() : chain.back().gen;
  for (FlatId f = last + 1; f < m.size(); ++f) {
    if (!m.less(last, f)) continue;
    const int gap = m.rank(f) - m.rank(last);
    const int bound = (first && ctx.mode() == RingMode::augmented) ? gap : gap - 1;
    for (int e = 1; e <= std::min(bound, remaining); ++e) {
      chain.push_back({f, static_cast<std::uint32_t>(e)});
      extend_matroid(ctx, chain, remaining - e, out);
      chain.pop_back();
    }
  }
}

void extend_semilattice(const RingContext& ctx, std::vector<Factor>& chain, int remaining,
                        std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::from_factors(chain));
    return;
  }
  const auto& poset = ctx.semilattice().poset();
  for (GenId x = 0; x < poset.size(); ++x) {
    if (!chain.empty() && !poset.less(chain.back().gen, x)) continue;
    for (int e = 1; e <= remaining; ++e) {
      chain.push_back({x, static_cast<std::uint32_t>(e)});
      extend_semilattice(ctx, chain, remaining - e, out);
      chain.pop_back();
    }
  }
}

}  // namespace

std::vector<Monomial> standard_monomials(const RingContext& ctx, int d) {
  if (d < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  std::vector<Monomial> out;
  std::vector<Factor> chain;
  if (ctx.is_matroid()) {
    extend_matroid(ctx, chain, d, out);
  } else {
    extend_semilattice(ctx, chain, d, out);
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return canonical_less(ctx, a, b); });
  return out;
}

std::vector<Integer> hilbert_series(const RingContext& ctx) {
  if (!ctx.is_matroid()) {
    throw Error(ErrorKind::ContextMismatch, "semilattice rings have infinite Hilbert series");
  }
  std::vector<Integer> out;
  for (int d = 0; d <= *ctx.top_degree(); ++d) {
    out.emplace_back(static_cast<unsigned long>(standard_monomials(ctx, d).size()));
  }
  return out;
}

std::vector<Integer> series_truncated(const RingContext& ctx, int d_max) {
  if (ctx.is_matroid()) throw Error(ErrorKind::ContextMismatch, "semilattice ring required");
  if (d_max < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  const auto f = chain_f_vector(ctx.semilattice().poset()).f_vector;
  std::vector<Integer> out{1};
  for (int d = 1; d <= d_max; ++d) {
    Integer total = 0;
    for (std::size_t k = 1; k < f.size() && static_cast<int>(k) <= d; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - 1),
                   static_cast<unsigned long>(k - 1));
      total += f[k] * binom;
    }
    out.push_back(total);
  }
  return out;
}

}  // namespace chow
