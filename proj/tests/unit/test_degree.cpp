#include <random>

#include "chow/degree.hpp"
#include "chow/error.hpp"
#include "chow/hall_rado.hpp"
#include "chow/matroid.hpp"
#include "chow/straighten.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace chow;
using testing_support::flat_with;

namespace {

RingContext ring(RingMode mode, MatroidLattice m) { return RingContext::make(mode, std::move(m)); }

Polynomial h(GenId g, std::uint32_t e = 1) { return Polynomial(Monomial::generator(g, e)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("Hall-Rado conditions") {
  auto b3 = boolean_matroid(3);
  const FlatId e = b3.top(), a = flat_with(b3, {0}), f = flat_with(b3, {0, 1});
  std::vector<FlatId> all_e{e, e, e};
  CHECK(hall_rado(b3, all_e).ok);
  std::vector<FlatId> twice{a, a, e};
  auto r = hall_rado(b3, twice);
  CHECK_FALSE(r.ok);
  CHECK(r.witness == std::vector<std::size_t>{0, 1});
  auto r0 = contraction(b3, b3.top());
  CHECK(hall_rado(r0, std::vector<FlatId>{}).ok);
  CHECK(kind_of([&] { hall_rado(b3, std::vector<FlatId>{e}); }) == ErrorKind::SizeMismatch);

  std::vector<FlatId> fe{f, e};
  CHECK(dragon_hall_rado(b3, fe).ok);
  std::vector<FlatId> ae{a, e};
  auto d = dragon_hall_rado(b3, ae);
  CHECK_FALSE(d.ok);
  CHECK(d.witness == std::vector<std::size_t>{0});
  CHECK(dragon_hall_rado(b3, std::vector<FlatId>{e, e}).ok);
  CHECK(kind_of([&] { dragon_hall_rado(b3, std::vector<FlatId>{0, e}); }) ==
        ErrorKind::InvalidFlat);
  CHECK(kind_of([&] { dragon_hall_rado(b3, all_e); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("degree maps") {
  auto b3 = boolean_matroid(3);
  const FlatId e = b3.top(), a = flat_with(b3, {0}), f = flat_with(b3, {0, 1});
  auto aug = ring(RingMode::augmented, b3);
  auto red = ring(RingMode::reduced, b3);
  CHECK(degree_aug(aug, h(e, 3)) == 1);
  CHECK(degree_aug(aug, h(a, 2) * h(e)) == 0);
  CHECK(degree_aug(aug, h(e, 2)) == 0);
  CHECK(degree_red(red, h(e, 2)) == 1);
  CHECK(degree_red(red, h(a) * h(e)) == 0);
  CHECK(degree_red(red, h(f) * h(e)) == 1);
  CHECK(kind_of([&] { degree_aug(aug, h(e) + h(e, 2)); }) == ErrorKind::NotHomogeneous);
  CHECK(kind_of([&] { degree_aug(red, h(e, 3)); }) == ErrorKind::ContextMismatch);
  CHECK(kind_of([&] { degree_red(aug, h(e, 2)); }) == ErrorKind::ContextMismatch);

  CHECK(verify_degree_welldefined(ring(RingMode::augmented, boolean_matroid(1))).ok());
  CHECK(verify_degree_welldefined(ring(RingMode::reduced, boolean_matroid(1))).ok());
  CHECK(verify_degree_welldefined(ring(RingMode::reduced, uniform_matroid(2, 4))).ok());
}

TEST_CASE("x elements") {
  auto b2 = ring(RingMode::augmented, boolean_matroid(2));
  CHECK(x_element(b2, 0) == h(1) + h(2) - h(3));
  CHECK(kind_of([&] { x_element(b2, 3); }) == ErrorKind::InvalidFlat);
  CHECK(kind_of([&] { x_element(b2.with_mode(RingMode::reduced), 0); }) ==
        ErrorKind::InvalidFlat);

  auto u23 = ring(RingMode::augmented, uniform_matroid(2, 3));
  CHECK(x_element(u23, 1) == h(4) - h(1));
  CHECK(x_element(u23, 1) == testing_support::naive_x_element(u23, 1));

  auto red3 = ring(RingMode::reduced, boolean_matroid(3));
  auto x = x_element(red3, 1);
  CHECK(x == testing_support::naive_x_element(red3, 1));
  CHECK(x.size() == 4);
}

TEST_CASE("phi maps") {
  auto b3 = boolean_matroid(3);
  const FlatId g = flat_with(b3, {0}), c = flat_with(b3, {1, 2});
  auto aug = ring(RingMode::augmented, b3);
  PhiMap phi(aug, g);
  auto below = phi.apply(h(g));
  REQUIRE(below.size() == 1);
  CHECK(below.begin()->first.first ==
        Monomial::generator(*phi.restriction().from_parent[g]));
  CHECK(below.begin()->first.second.empty());
  auto above = phi.apply(h(c));
  REQUIRE(above.size() == 1);
  CHECK(above.begin()->first.first.empty());
  CHECK(above.begin()->first.second ==
        Monomial::generator(*phi.contraction().from_parent[b3.top()]));
  CHECK(above.begin()->second == 1);

  PhiMap phi0(aug, 0);
  CHECK(phi0.apply(h(g)).empty());
}

TEST_CASE("annihilators") {
  CHECK(verify_annihilator(ring(RingMode::augmented, boolean_matroid(3)), 0).ok());
  auto u23 = ring(RingMode::augmented, uniform_matroid(2, 3));
  CHECK(verify_annihilator(u23, 1).ok());
  // x_G (h_b - h_c) for the two other atoms
  Straightener s(u23);
  CHECK(s.straighten(x_element(u23, 1) * (h(2) - h(3))).is_zero());
  auto r1 = ring(RingMode::augmented, boolean_matroid(1));
  CHECK(Straightener(r1).straighten(x_element(r1, 0) * h(1)).is_zero());
}

TEST_CASE("projection formula examples") {
  auto b3 = boolean_matroid(3);
  auto aug = ring(RingMode::augmented, b3);
  for (FlatId g = 0; g + 1 < b3.size(); ++g) {
    CAPTURE(g);
    const int rk = b3.rank(g);
    Polynomial y = h(b3.top(), 2 - rk);
    if (rk > 0) y = y * h(g, rk);
    if (rk == 2) y = h(g, 2);
    auto c = verify_projection_formula(aug, g, y);
    CHECK(c.tensor_side == 1);
    CHECK(c.product_side == 1);
    auto off = verify_projection_formula(aug, g, h(b3.top()));
    CHECK(off.tensor_side == 0);
    CHECK(off.product_side == 0);
  }
}

TEST_CASE("property: degree maps match the subset oracle") {
  for (const auto& nm : testing_support::all_matroids()) {
    if (nm.matroid.size() > 16) continue;
    CAPTURE(nm.name);
    for (auto mode : {RingMode::augmented, RingMode::reduced}) {
      auto ctx = ring(mode, nm.matroid);
      DegreeMap deg(ctx);
      for (const auto& m : testing_support::free_monomials(ctx, deg.top_degree())) {
        CHECK(deg.monomial(m) == testing_support::naive_degree(ctx, m));
      }
    }
  }
}

TEST_CASE("property: Hall-Rado is monotone and atom products have degree one") {
  for (const auto& nm : testing_support::fixed_matroids()) {
    const auto& m = nm.matroid;
    if (m.size() > 16) continue;
    CAPTURE(nm.name);
    auto ctx = ring(RingMode::augmented, m);
    DegreeMap deg(ctx);
    for (const auto& mono : testing_support::free_monomials(ctx, m.rank())) {
      if (deg.monomial(mono) == 0) continue;
      for (const auto& f : mono.factors()) {
        for (FlatId up : m.covers(f.gen)) {
          CHECK(deg.monomial(mono.divided(f.gen).times(up)) == 1);
        }
      }
    }
    const auto atoms = m.atoms();
    for (std::uint32_t mask = 1; mask < (1U << atoms.size()); ++mask) {
      Monomial prod;
      FlatId j = m.bottom();
      int k = 0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (mask >> i & 1U) {
          prod = prod.times(atoms[i]);
          j = m.join(j, atoms[i]);
          ++k;
        }
      }
      if (m.rank(j) != k) continue;
      CHECK(deg.monomial(prod.times(m.top(), m.rank() - k)) == 1);
    }
  }
}

TEST_CASE("property: x elements match subset enumeration") {
  for (const auto& nm : testing_support::all_matroids()) {
    CAPTURE(nm.name);
    for (auto mode : {RingMode::augmented, RingMode::reduced}) {
      auto ctx = ring(mode, nm.matroid);
      for (FlatId g = mode == RingMode::reduced ? 1 : 0; g < nm.matroid.top(); ++g) {
        CHECK(x_element(ctx, g) == testing_support::naive_x_element(ctx, g));
      }
    }
  }
}

TEST_CASE("property: phi is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (const auto& nm : testing_support::fixed_matroids()) {
    const auto& m = nm.matroid;
    if (m.size() > 16) continue;
    CAPTURE(nm.name);
    for (auto mode : {RingMode::augmented, RingMode::reduced}) {
      auto ctx = ring(mode, m);
      for (FlatId g = mode == RingMode::reduced ? 1 : 0; g < m.top(); ++g) {
        PhiMap phi(ctx, g);
        for (int t = 0; t < 5; ++t) {
          auto p = random_homogeneous(ctx, 1, 3, rng);
          auto q = random_homogeneous(ctx, 1 + t % 2, 3, rng);
          CHECK(phi.apply(p * q) == phi.multiply(phi.apply(p), phi.apply(q)));
        }
        // x_H for H above G lands in the right factor
        for (FlatId hh = g + 1; hh < m.top(); ++hh) {
          if (!m.less(g, hh)) continue;
          auto image = phi.apply(x_element(ctx, hh));
          auto contracted = RingContext::make(RingMode::reduced, phi.contraction().matroid);
          auto expect = straighten(contracted,
                                   x_element(contracted, *phi.contraction().from_parent[hh]));
          Tensor want;
          for (const auto& [mono, c] : expect.terms()) want[{Monomial{}, mono}] = c;
          CHECK(image == want);
        }
      }
    }
  }
}

TEST_CASE("property: projection formula and annihilators on Boolean matroids") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    auto b = boolean_matroid(n);
    for (auto mode : {RingMode::augmented, RingMode::reduced}) {
      auto ctx = ring(mode, b);
      const int top = *ctx.top_degree();
      for (FlatId g = mode == RingMode::reduced ? 1 : 0; g < b.top(); ++g) {
        CHECK(verify_annihilator(ctx, g).ok());
        for (int t = 0; t < 10; ++t) {
          auto y = random_homogeneous(ctx, top > 0 ? top - 1 : 0, 4, rng);
          CHECK(verify_projection_formula(ctx, g, y).ok());
        }
      }
    }
  }
}
