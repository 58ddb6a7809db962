#include "chow/asl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chow/error.hpp"
#include "chow/linalg.hpp"
#include "chow/oracle.hpp"
#include "chow/standard_monomials.hpp"
#include "chow/straighten.hpp"

namespace chow {

namespace {

void check_size(const MeetSemilattice& l, int d_max) {
  if (l.size() > 50) {
    throw Error(ErrorKind::SizeLimit, std::to_string(l.size()) + " elements (limit 50)");
  }
  if (d_max > 6) throw Error(ErrorKind::SizeLimit, "degree bound " + std::to_string(d_max) + " (limit 6)");
  if (d_max < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree bound");
}

}  // namespace

bool check_nonzerodivisor(const MeetSemilattice& l, int d_max, std::string* detail) {
  check_size(l, d_max);
  const RingContext ctx = RingContext::make(l);
  RelationOracle oracle(ctx);
  const Monomial zero = Monomial::generator(l.bottom());
  for (int d = 0; d < d_max; ++d) {
    const auto basis = standard_monomials(ctx, d);
    const std::size_t target = oracle.rank(d + 1);
    IntMatrix m(basis.size(), target);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto coords = oracle.coordinates(basis[i] * zero);
      for (std::size_t j = 0; j < target; ++j) m(i, j) = coords[j];
    }
    const std::size_t rk = rank(m);
    auto inv = smith_invariants(std::move(m));
    const bool saturated =
        std::all_of(inv.begin(), inv.end(), [](const Integer& x) { return x == 1; });
    if (rk != basis.size() || !saturated) {
      if (detail) {
        *detail = "degree " + std::to_string(d) + ": rank " + std::to_string(rk) + " of " +
                  std::to_string(basis.size()) + (saturated ? "" : ", not saturated");
      }
      return false;
    }
  }
  return true;
}

ASLCheckReport check_asl(const MeetSemilattice& l, int d_max) {
  check_size(l, d_max);
  const RingContext ctx = RingContext::make(l);
  ASLCheckReport out;

  RelationOracle oracle(ctx);
  const auto expected = series_truncated(ctx, d_max);
  for (int d = 0; d <= d_max; ++d) {
    const auto chains = standard_monomials(ctx, d);
    const auto& info = oracle.degree(d);
    std::string why;
    if (chains.size() != expected[static_cast<std::size_t>(d)]) {
      why = std::to_string(chains.size()) + " chain monomials, order complex gives " +
            expected[static_cast<std::size_t>(d)].get_str();
    } else if (!info.torsion_free) {
      why = "torsion";
    } else if (auto cert = certify_basis(oracle, chains, d); !cert.ok) {
      why = cert.detail;
    }
    if (!why.empty()) {
      out.axiom1_ok = false;
      out.details.push_back("axiom 1, degree " + std::to_string(d) + ": " + why);
      break;
    }
  }

  Straightener s(ctx);
  for (ElementId x = 0; x < l.size(); ++x) {
    for (ElementId y = x + 1; y < l.size(); ++y) {
      if (l.poset().comparable(x, y)) continue;
      const ElementId z = l.meet(x, y);
      const Polynomial nf = s.straighten(Polynomial(Monomial::generator(x) * Monomial::generator(y)));
      bool ok = l.less(z, x) && l.less(z, y);
      for (const auto& [m, c] : nf.terms()) ok = ok && m.exponent(z) > 0;
      if (!ok) {
        out.axiom2_ok = false;
        out.details.push_back("axiom 2: h[" + std::to_string(x) + "]*h[" + std::to_string(y) +
                              "] = " + to_string(nf));
      }
    }
  }

  std::string why;
  out.nzd_ok = check_nonzerodivisor(l, d_max, &why);
  if (!out.nzd_ok) out.details.push_back("h_0: " + why);
  return out;
}

InvertedFlatPoset inverted_flat_poset(const MatroidLattice& m) {
  InvertedFlatPoset out;
  out.matroid = std::make_shared<const MatroidLattice>(m);
  for (FlatId f = 1; f < m.size(); ++f) out.flat_of.push_back(f);
  out.lattice = MeetSemilattice::from_poset(m.poset().induced(out.flat_of).opposite());
  return out;
}

Polynomial quotient_to_chow(const InvertedFlatPoset& l, const RingContext& target,
                            const Polynomial& p) {
  if (!target.is_matroid() || target.matroid().size() != l.matroid->size() ||
      !(target.matroid().poset() == l.matroid->poset())) {
    throw Error(ErrorKind::ContextMismatch, "target ring is not built on the same flats");
  }
  Polynomial image;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Factor> f;
    for (const auto& x : m.factors()) {
      if (x.gen >= l.flat_of.size()) {
        throw Error(ErrorKind::UnknownFlat, "h[" + std::to_string(x.gen) + "]");
      }
      f.push_back({l.flat_of[x.gen], x.exp});
    }
    image.add_term(Monomial::from_factors(std::move(f)), c);
  }
  return straighten(target, image);
}

std::vector<MeetSemilattice> enumerate_semilattices(int max_size) {
  if (max_size > 6) throw Error(ErrorKind::SizeLimit, "semilattice enumeration stops at 6");
  std::vector<MeetSemilattice> out;
  for (int n = 1; n <= max_size; ++n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (ElementId i = 0; i < un; ++i) {
      for (ElementId j = i + 1; j < un; ++j) pairs.emplace_back(i, j);
    }
    std::vector<int> perm(un);
    std::set<std::uint64_t> seen;
    const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      auto rel = [&](std::size_t i, std::size_t j) {
        if (i == j) return true;
        if (i > j) return false;
        // index of (i, j) in `pairs`
        const std::size_t idx = i * (2 * un - i - 1) / 2 + (j - i - 1);
        return ((mask >> idx) & 1U) != 0;
      };
      bool transitive = true;
      for (std::size_t i = 0; i < un && transitive; ++i) {
        for (std::size_t j = i + 1; j < un && transitive; ++j) {
          if (!rel(i, j)) continue;
          for (std::size_t k = j + 1; k < un; ++k) {
            if (rel(j, k) && !rel(i, k)) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (!transitive) continue;
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t canon = UINT64_MAX;
      do {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < un; ++i) {
          for (std::size_t j = 0; j < un; ++j) {
            code = (code << 1) | (rel(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j])) ? 1U : 0U);
          }
        }
        canon = std::min(canon, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(canon).second) continue;
      Poset p = Poset::from_predicate(un, [&](ElementId i, ElementId j) { return rel(i, j); });
      try {
        out.push_back(MeetSemilattice::from_poset(std::move(p)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotASemilattice) throw;
      }
    }
  }
  return out;
}

}  // namespace chow
