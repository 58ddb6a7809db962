#include "chow/degree.hpp"

#include <bit>
#include <functional>

#include "chow/error.hpp"

namespace chow {

DegreeMap::DegreeMap(RingContext ctx) : ctx_(std::move(ctx)) {
  if (!ctx_.is_matroid()) {
    throw Error(ErrorKind::ContextMismatch, "degree maps need a matroid ring");
  }
  top_ = *ctx_.top_degree();
}

int DegreeMap::monomial(const Monomial& m) {
  if (static_cast<int>(m.degree()) != top_) return 0;
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  const auto& mat = ctx_.matroid();
  auto f = m.factors();
  for (const auto& x : f) {
    if (!ctx_.is_generator(x.gen)) {
      throw Error(ErrorKind::UnknownFlat, "h[" + std::to_string(x.gen) + "] is not a generator");
    }
  }
  if (f.size() > 20) throw Error(ErrorKind::SizeLimit, "monomial support too large");
  // Worst subsets take every copy of each flat they touch.
  const int slack = ctx_.mode() == RingMode::augmented ? 0 : 1;
  const std::uint32_t count = std::uint32_t{1} << f.size();
  std::vector<FlatId> join(count, mat.bottom());
  std::vector<int> weight(count, 0);
  int value = 1;
  for (std::uint32_t mask = 1; mask < count && value; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    join[mask] = mat.join(join[rest], f[low].gen);
    weight[mask] = weight[rest] + static_cast<int>(f[low].exp);
    if (mat.rank(join[mask]) < weight[mask] + slack) value = 0;
  }
  cache_.emplace(m, value);
  return value;
}

Integer DegreeMap::operator()(const Polynomial& p) {
  if (!p.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, to_string(p));
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) {
    if (monomial(m)) total += c;
  }
  return total;
}

Integer degree_aug(const RingContext& ctx, const Polynomial& p) {
  if (ctx.mode() != RingMode::augmented) {
    throw Error(ErrorKind::ContextMismatch, "augmented ring required");
  }
  return DegreeMap(ctx)(p);
}

Integer degree_red(const RingContext& ctx, const Polynomial& p) {
  if (ctx.mode() != RingMode::reduced) {
    throw Error(ErrorKind::ContextMismatch, "reduced ring required");
  }
  return DegreeMap(ctx)(p);
}

namespace {

void free_monomials(const std::vector<GenId>& gens, int degree, std::size_t start,
                    std::vector<Factor>& acc, const std::function<void(const Monomial&)>& fn) {
  if (degree == 0) {
    fn(Monomial::from_factors(acc));
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i) {
    acc.push_back({gens[i], 1});
    free_monomials(gens, degree - 1, i, acc, fn);
    acc.pop_back();
  }
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

CheckReport verify_degree_welldefined(const RingContext& ctx, std::size_t sample_limit,
                                      std::uint64_t seed) {
  DegreeMap deg(ctx);
  CheckReport report;
  const auto relations = ctx.relations();
  const auto& gens = ctx.generators();
  Integer total = 0;
  for (const auto& rel : relations) {
    const int t = deg.top_degree() - static_cast<int>(*rel.degree());
    if (t < 0) continue;
    total += gens.empty() ? Integer(t == 0 ? 1 : 0)
                          : binomial(gens.size() + static_cast<std::size_t>(t) - 1,
                                     static_cast<std::size_t>(t));
  }
  report.sampled = total > static_cast<unsigned long>(sample_limit);
  const std::size_t per_relation =
      relations.empty() ? 0 : std::max<std::size_t>(1, sample_limit / relations.size());
  std::mt19937_64 rng(seed);

  auto check = [&](const Polynomial& rel, const Monomial& m) {
    ++report.checked;
    Integer value = 0;
    for (const auto& [term, c] : rel.terms()) {
      if (deg.monomial(term * m)) value += c;
    }
    if (value != 0) {
      report.fail("deg((" + to_string(rel) + ") * " + to_string(m) + ") = " + value.get_str());
    }
  };

  for (const auto& rel : relations) {
    const int t = deg.top_degree() - static_cast<int>(*rel.degree());
    if (t < 0) continue;
    if (!report.sampled) {
      std::vector<Factor> acc;
      free_monomials(gens, t, 0, acc, [&](const Monomial& m) { check(rel, m); });
      continue;
    }
    for (std::size_t s = 0; s < per_relation; ++s) {
      std::vector<Factor> acc;
      for (int i = 0; i < t; ++i) acc.push_back({gens[rng() % gens.size()], 1});
      check(rel, Monomial::from_factors(acc));
    }
  }
  return report;
}

Polynomial x_element(const RingContext& ctx, FlatId g) {
  const auto& m = ctx.matroid();
  if (g >= m.size() || g == m.top()) {
    throw Error(ErrorKind::InvalidFlat, "x_G needs a proper flat, got " + std::to_string(g));
  }
  if (ctx.mode() == RingMode::reduced && g == m.bottom()) {
    throw Error(ErrorKind::InvalidFlat, "x_G in the reduced ring needs a nonempty flat");
  }
  std::vector<FlatId> outside;
  for (FlatId a : m.atoms()) {
    if (!m.leq(a, g)) outside.push_back(a);
  }
  if (outside.size() > 20) {
    throw Error(ErrorKind::SizeLimit,
                std::to_string(outside.size()) + " atoms outside the flat (limit 20)");
  }
  const std::uint32_t count = std::uint32_t{1} << outside.size();
  std::vector<FlatId> join(count, g);
  std::vector<Integer> by_flat(m.size(), 0);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      join[mask] = m.join(join[mask & (mask - 1)], outside[low]);
    }
    by_flat[join[mask]] += (std::popcount(mask) % 2 == 0) ? -1 : 1;
  }
  Polynomial out;
  for (FlatId f = 1; f < m.size(); ++f) {
    if (by_flat[f] != 0) out.add_term(Monomial::generator(f), by_flat[f]);
  }
  return out;
}

std::string to_string(const Tensor& t) {
  if (t.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t) {
    Integer v = c;
    if (!first) {
      out += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    } else if (v < 0) {
      out += "-";
      v = -v;
    }
    first = false;
    if (v != 1) out += v.get_str() + "*";
    out += "(" + to_string(key.first) + " (x) " + to_string(key.second) + ")";
  }
  return out;
}

namespace {

RingContext phi_source_check(const RingContext& ctx, FlatId g) {
  const auto& m = ctx.matroid();
  if (g >= m.size() || g == m.top()) {
    throw Error(ErrorKind::InvalidFlat, "phi_G needs a proper flat, got " + std::to_string(g));
  }
  if (ctx.mode() == RingMode::reduced && g == m.bottom()) {
    throw Error(ErrorKind::InvalidFlat, "phi_G on the reduced ring needs a nonempty flat");
  }
  return ctx;
}

}  // namespace

PhiMap::PhiMap(const RingContext& ctx, FlatId g)
    : source_(phi_source_check(ctx, g)),
      g_(g),
      restriction_(restriction_map(ctx.matroid(), g)),
      contraction_(contraction_map(ctx.matroid(), g)),
      left_(RingContext::make(ctx.mode(), restriction_.matroid)),
      right_(RingContext::make(RingMode::reduced, contraction_.matroid)),
      left_degree_(left_.context()),
      right_degree_(right_.context()) {}

void PhiMap::add_normalized(const Monomial& l, const Monomial& r, const Integer& c,
                            Tensor& out) {
  const Polynomial& nl = left_.normal_form(l);
  if (nl.is_zero()) return;
  const Polynomial& nr = right_.normal_form(r);
  for (const auto& [ml, cl] : nl.terms()) {
    for (const auto& [mr, cr] : nr.terms()) {
      auto [it, inserted] = out.try_emplace({ml, mr}, 0);
      it->second += c * cl * cr;
      if (it->second == 0) out.erase(it);
    }
  }
}

Tensor PhiMap::apply(const Polynomial& p) {
  source_.check_polynomial(p);
  const auto& m = source_.matroid();
  Tensor out;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<Factor> lf;
    std::vector<Factor> rf;
    for (const auto& f : mono.factors()) {
      if (m.leq(f.gen, g_)) {
        lf.push_back({*restriction_.from_parent[f.gen], f.exp});
      } else {
        rf.push_back({*contraction_.from_parent[m.join(f.gen, g_)], f.exp});
      }
    }
    add_normalized(Monomial::from_factors(std::move(lf)), Monomial::from_factors(std::move(rf)),
                   c, out);
  }
  return out;
}

Tensor PhiMap::multiply(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      add_normalized(ka.first * kb.first, ka.second * kb.second, ca * cb, out);
    }
  }
  return out;
}

Integer PhiMap::degree(const Tensor& t) {
  Integer total = 0;
  for (const auto& [key, c] : t) {
    if (left_degree_.monomial(key.first) && right_degree_.monomial(key.second)) total += c;
  }
  return total;
}

CheckReport verify_annihilator(const RingContext& ctx, FlatId g) {
  const Polynomial x = x_element(ctx, g);
  const auto& m = ctx.matroid();
  Straightener s(ctx);
  CheckReport report;
  auto check = [&](const Polynomial& gen) {
    ++report.checked;
    Polynomial r = s.straighten(x * gen);
    if (!r.is_zero()) {
      report.fail("x_" + std::to_string(g) + " * (" + to_string(gen) + ") = " + to_string(r));
    }
  };
  for (FlatId f : m.covers(g)) check(Polynomial::generator(f));
  for (FlatId h = 1; h < m.size(); ++h) {
    if (m.leq(h, g)) continue;
    for (FlatId k = h + 1; k < m.size(); ++k) {
      if (m.leq(k, g) || m.join(h, g) != m.join(k, g)) continue;
      check(Polynomial::generator(h) - Polynomial::generator(k));
    }
  }
  return report;
}

ProjectionCheck verify_projection_formula(PhiMap& phi, Straightener& ring, DegreeMap& degree,
                                          const Polynomial& x_g, const Polynomial& y) {
  if (!y.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, to_string(y));
  ProjectionCheck out;
  out.tensor_side = phi.degree(phi.apply(y));
  out.product_side = degree(ring.straighten(x_g * y));
  return out;
}

ProjectionCheck verify_projection_formula(const RingContext& ctx, FlatId g, const Polynomial& y) {
  PhiMap phi(ctx, g);
  Straightener ring(ctx);
  DegreeMap degree(ctx);
  return verify_projection_formula(phi, ring, degree, x_element(ctx, g), y);
}

Polynomial random_homogeneous(const RingContext& ctx, int degree, std::size_t terms,
                              std::mt19937_64& rng) {
  const auto& gens = ctx.generators();
  Polynomial out;
  if (gens.empty()) {
    if (degree == 0) out.add_term(Monomial{}, Integer(static_cast<long>(rng() % 7) - 3));
    return out;
  }
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Factor> acc;
    for (int i = 0; i < degree; ++i) acc.push_back({gens[rng() % gens.size()], 1});
    out.add_term(Monomial::from_factors(std::move(acc)),
                 Integer(static_cast<long>(rng() % 7) - 3));
  }
  return out;
}

}  // namespace chow
