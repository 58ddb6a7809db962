#include "chow/decomposition.hpp"

#include <bit>

#include "chow/error.hpp"
#include "chow/oracle.hpp"
#include "chow/standard_monomials.hpp"
#include "chow/straighten.hpp"

namespace chow {

std::vector<GradedPiece> split_by_flat(const RingContext& ctx, const Polynomial& p) {
  const Polynomial nf = straighten(ctx, p);
  std::map<FlatId, Polynomial> by_flat;
  for (const auto& [m, c] : nf.terms()) by_flat[ctx.component_of(m)].add_term(m, c);
  std::vector<GradedPiece> out;
  for (auto& [f, q] : by_flat) out.push_back({f, std::move(q)});
  return out;
}

std::vector<Integer> piece_dimensions(const RingContext& ctx, FlatId f) {
  const auto& m = ctx.matroid();
  if (f >= m.size()) throw Error(ErrorKind::UnknownFlat, "flat " + std::to_string(f));
  if (f == m.bottom()) throw Error(ErrorKind::EmptyFlat, "pieces are indexed by nonempty flats");
  std::vector<Integer> out;
  for (int d = 0; d <= *ctx.top_degree(); ++d) {
    long count = 0;
    for (const auto& mono : standard_monomials(ctx, d)) {
      if (ctx.component_of(mono) == f) ++count;
    }
    out.emplace_back(count);
  }
  return out;
}

std::vector<Integer> truncated_restriction_series(const MatroidLattice& m, FlatId f) {
  if (f == m.bottom()) throw Error(ErrorKind::EmptyFlat, "Tr(M^F) needs a nonempty flat");
  auto tr = truncation(restriction(m, f));
  auto h = hilbert_series(RingContext::make(RingMode::augmented, std::move(tr)));
  std::vector<Integer> out{0};
  out.insert(out.end(), h.begin(), h.end());
  return out;
}

MobiusElement mobius_multiply(const MatroidLattice& m, const MobiusElement& u,
                              const MobiusElement& v) {
  MobiusElement out;
  for (const auto& [f, a] : u) {
    for (const auto& [g, b] : v) {
      const FlatId j = m.join(f, g);
      if (m.rank(f) + m.rank(g) != m.rank(j)) continue;
      auto& slot = out[j];
      slot += a * b;
      if (slot == 0) out.erase(j);
    }
  }
  return out;
}

namespace {

std::string series_string(const std::vector<Integer>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].get_str();
  return out + ")";
}

void trim(std::vector<Integer>& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

}  // namespace

CheckReport verify_decomposition(const RingContext& ctx) {
  const auto& m = ctx.matroid();
  const int top = *ctx.top_degree();
  CheckReport report;
  RelationOracle oracle(ctx);

  // Piece dimensions from standard monomials against the oracle's graded ranks.
  std::vector<std::vector<long>> pieces(m.size(), std::vector<long>(static_cast<std::size_t>(top) + 1));
  for (int d = 0; d <= top; ++d) {
    std::vector<long> from_oracle(m.size(), 0);
    for (std::size_t i = 0; i < oracle.rank(d); ++i) ++from_oracle[oracle.basis_component(d, i)];
    long total = 0;
    for (const auto& mono : standard_monomials(ctx, d)) {
      ++pieces[ctx.component_of(mono)][static_cast<std::size_t>(d)];
      ++total;
    }
    ++report.checked;
    if (static_cast<std::size_t>(total) != oracle.rank(d)) {
      report.fail("degree " + std::to_string(d) + ": pieces sum to " + std::to_string(total) +
                  ", rank " + std::to_string(oracle.rank(d)));
    }
    for (FlatId f = 0; f < m.size(); ++f) {
      ++report.checked;
      if (pieces[f][static_cast<std::size_t>(d)] != from_oracle[f]) {
        report.fail("degree " + std::to_string(d) + ", flat " + m.flat_name(f) + ": " +
                    std::to_string(pieces[f][static_cast<std::size_t>(d)]) +
                    " standard monomials, oracle rank " + std::to_string(from_oracle[f]));
      }
    }
  }

  // Rewriting stays inside a piece.
  Straightener s(ctx);
  const auto& gens = ctx.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      const Monomial mono = Monomial::generator(gens[i]) * Monomial::generator(gens[j]);
      const FlatId f = ctx.component_of(mono);
      ++report.checked;
      for (const auto& [t, c] : s.normal_form(mono).terms()) {
        if (ctx.component_of(t) != f) {
          report.fail("straightening " + to_string(mono) + " leaves piece " + m.flat_name(f));
          break;
        }
      }
    }
  }

  if (ctx.mode() != RingMode::augmented) return report;
  for (FlatId f = 1; f < m.size(); ++f) {
    const int rk = m.rank(f);
    std::vector<Integer> dims;
    for (int d = 0; d <= top; ++d) dims.emplace_back(pieces[f][static_cast<std::size_t>(d)]);
    ++report.checked;
    bool top_ok = dims[static_cast<std::size_t>(rk)] == 1;
    for (int d = rk + 1; d <= top; ++d) top_ok = top_ok && dims[static_cast<std::size_t>(d)] == 0;
    if (top_ok) {
      for (const auto& mono : standard_monomials(ctx, rk)) {
        if (ctx.component_of(mono) == f) {
          top_ok = mono == Monomial::generator(f, static_cast<std::uint32_t>(rk));
        }
      }
    }
    if (!top_ok) {
      report.fail("piece " + m.flat_name(f) + " is not spanned by h_F^rk(F) at the top: " +
                  series_string(dims));
    }
    auto expected = truncated_restriction_series(m, f);
    trim(dims);
    trim(expected);
    ++report.checked;
    if (dims != expected) {
      report.fail("piece " + m.flat_name(f) + " has " + series_string(dims) + ", Tr(M^F) gives " +
                  series_string(expected));
    }
  }
  return report;
}

CheckReport verify_mobius_embedding(const RingContext& ctx) {
  if (ctx.mode() != RingMode::augmented) {
    throw Error(ErrorKind::ContextMismatch, "the Moebius algebra embeds in the augmented ring");
  }
  const auto& m = ctx.matroid();
  Straightener s(ctx);
  CheckReport report;
  auto image = [&](const MobiusElement& u) {
    Polynomial out;
    for (const auto& [f, c] : u) {
      out.add_term(Monomial::generator(f, static_cast<std::uint32_t>(m.rank(f))), c);
    }
    return out;
  };
  for (FlatId f = 0; f < m.size(); ++f) {
    for (FlatId g = f; g < m.size(); ++g) {
      ++report.checked;
      const MobiusElement prod = mobius_multiply(m, {{f, 1}}, {{g, 1}});
      const Polynomial lhs = s.straighten(image({{f, 1}}) * image({{g, 1}}));
      if (lhs != image(prod)) {
        report.fail("y_" + std::to_string(f) + " * y_" + std::to_string(g) + ": " +
                    to_string(lhs) + " vs " + to_string(image(prod)));
      }
    }
  }
  const auto atoms = m.atoms();
  if (atoms.size() > 16) {
    throw Error(ErrorKind::SizeLimit, "too many atoms for the atom-product check");
  }
  const std::uint32_t count = std::uint32_t{1} << atoms.size();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (std::popcount(mask) > m.rank() + 1) continue;
    ++report.checked;
    MobiusElement y{{m.bottom(), 1}};
    Polynomial h = Polynomial::constant(1);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!((mask >> i) & 1U)) continue;
      y = mobius_multiply(m, y, {{atoms[i], 1}});
      h = h * Polynomial::generator(atoms[i]);
    }
    const Polynomial lhs = s.straighten(h);
    if (lhs != image(y)) report.fail(to_string(h) + " straightens to " + to_string(lhs));
  }
  return report;
}

CheckReport verify_hilbert_recursion(const RingContext& ctx) {
  const auto& m = ctx.matroid();
  CheckReport report;
  auto lhs = hilbert_series(ctx);
  std::vector<Integer> rhs{1};
  const int min_rank = ctx.mode() == RingMode::augmented ? 1 : 2;
  for (FlatId f = 1; f < m.size(); ++f) {
    if (m.rank(f) < min_rank) continue;
    auto tr = truncation(restriction(m, f));
    auto h = hilbert_series(RingContext::make(ctx.mode(), std::move(tr)));
    if (rhs.size() < h.size() + 1) rhs.resize(h.size() + 1, 0);
    for (std::size_t d = 0; d < h.size(); ++d) rhs[d + 1] += h[d];
  }
  trim(lhs);
  trim(rhs);
  ++report.checked;
  if (lhs != rhs) report.fail("series " + series_string(lhs) + " vs recursion " + series_string(rhs));
  return report;
}

}  // namespace chow
