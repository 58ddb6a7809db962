#include "chow/straighten.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

Straightener::Straightener(RingContext ctx, std::uint64_t step_limit)
    : ctx_(std::move(ctx)), step_limit_(step_limit) {}

Polynomial Straightener::straighten(const Polynomial& p) {
  ctx_.check_polynomial(p);
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out.add_scaled(normal_form(m), c);
  return out;
}

const Polynomial& Straightener::normal_form(const Monomial& m) {
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  Polynomial r = compute(m);
  return memo_.emplace(m, std::move(r)).first->second;
}

Polynomial Straightener::compute(const Monomial& m) {
  if (ctx_.is_matroid()) {
    const auto& mat = ctx_.matroid();
    for (const auto& f : m.factors()) {
      if (!mat.is_atom(f.gen)) continue;
      if (ctx_.mode() == RingMode::reduced || f.exp >= 2) return {};
    }
  }

  // Peel off unique dominant elements until two distinct ones remain.
  std::vector<GenId> rest;
  for (const auto& f : m.factors()) rest.push_back(f.gen);
  std::vector<GenId> top;
  while (!rest.empty()) {
    top.clear();
    for (GenId x : rest) {
      bool dominated = false;
      for (GenId y : rest) {
        if (y != x && ctx_.dominated_by(x, y)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) top.push_back(x);
    }
    if (top.size() >= 2) break;
    rest.erase(std::find(rest.begin(), rest.end(), top.front()));
  }
  if (rest.empty()) return reduce_chain(m);

  if (++steps_ > step_limit_) {
    throw Error(ErrorKind::Internal, "straightening exceeded " + std::to_string(step_limit_) +
                                         " rewrite steps");
  }
  std::sort(top.begin(), top.end());
  const GenId x = top[0];
  const GenId y = top[1];
  const GenId j = ctx_.combine(x, y);
  const Monomial base = m.divided(x).divided(y);
  const Monomial jj = Monomial::generator(j);
  Polynomial out;
  out.add_scaled(normal_form(base * Monomial::generator(x) * jj), 1);
  out.add_scaled(normal_form(base * Monomial::generator(y) * jj), 1);
  out.add_scaled(normal_form(base * Monomial::generator(j, 2)), -1);
  return out;
}

Polynomial Straightener::reduce_chain(const Monomial& m) const {
  if (!ctx_.is_matroid()) return Polynomial(m);
  const auto& mat = ctx_.matroid();
  const bool augmented = ctx_.mode() == RingMode::augmented;
  std::vector<Factor> chain(m.factors().begin(), m.factors().end());
  bool changed = true;
  while (changed && !chain.empty()) {
    changed = false;
    const auto first_rank = static_cast<std::uint32_t>(mat.rank(chain[0].gen));
    if (augmented ? chain[0].exp > first_rank : chain[0].exp >= first_rank) return {};
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto gap =
          static_cast<std::uint32_t>(mat.rank(chain[i].gen) - mat.rank(chain[i - 1].gen));
      if (chain[i].exp >= gap) {
        chain[i].exp += chain[i - 1].exp;
        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(i) - 1);
        changed = true;
        break;
      }
    }
  }
  return Polynomial(Monomial::from_factors(std::move(chain)));
}

Polynomial straighten(const RingContext& ctx, const Polynomial& p) {
  Straightener s(ctx);
  return s.straighten(p);
}

}  // namespace chow
