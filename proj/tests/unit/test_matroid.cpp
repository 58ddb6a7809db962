#include <algorithm>

#include "chow/error.hpp"
#include "chow/matroid.hpp"
#include "chow/matroid_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace chow;
using testing_support::flat_with;
using testing_support::isomorphic;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

CandidateLattice candidate(std::size_t n, std::vector<std::pair<ElementId, ElementId>> rel,
                           std::vector<int> rank) {
  return {build_poset(rel, n), std::move(rank), {}};
}

}  // namespace

TEST_CASE("validate_matroid accepts geometric lattices and names violations") {
  auto b3 = validate_matroid(as_candidate(boolean_matroid(3)));
  CHECK(b3.rank() == 3);
  CHECK(b3.size() == 8);

  // empty < a < E with rk(E) = 3
  CHECK(kind_of([] { validate_matroid(candidate(3, {{0, 1}, {1, 2}}, {0, 1, 3})); }) ==
        ErrorKind::NotRanked);
  // U(2,3): bottom, three atoms, top
  auto u23 = validate_matroid(candidate(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                                        {0, 1, 1, 1, 2}));
  CHECK(u23.rank() == 2);
  CHECK(isomorphic(u23, uniform_matroid(2, 3)));
  // two atoms with two upper bounds: no join
  CHECK(kind_of([] {
          validate_matroid(candidate(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}},
                                     {0, 1, 1, 2, 2}));
        }) == ErrorKind::NotALattice);
  // chain of length 2: the top is not a join of atoms
  CHECK(kind_of([] { validate_matroid(candidate(3, {{0, 1}, {1, 2}}, {0, 1, 2})); }) ==
        ErrorKind::NotAtomic);
  // atoms a,b,c,d; a v b and c v d meet at the bottom below a rank-3 top
  CHECK(kind_of([] {
          validate_matroid(candidate(8,
                                     {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6},
                                      {4, 6}, {5, 7}, {6, 7}},
                                     {0, 1, 1, 1, 1, 2, 2, 3}));
        }) == ErrorKind::NotSubmodular);
}

TEST_CASE("boolean, uniform and graphic constructors") {
  CHECK(boolean_matroid(2).size() == 4);
  CHECK(boolean_matroid(2).rank() == 2);
  auto b6 = boolean_matroid(6);
  CHECK(b6.size() == 64);
  CHECK(b6.rank() == 6);
  CHECK(kind_of([] { boolean_matroid(13); }) == ErrorKind::SizeLimit);

  CHECK(uniform_matroid(2, 3).size() == 5);
  CHECK(isomorphic(uniform_matroid(3, 3), boolean_matroid(3)));
  CHECK(kind_of([] { uniform_matroid(4, 3); }) == ErrorKind::InvalidParams);

  std::vector<std::pair<int, int>> k3{{0, 1}, {1, 2}, {0, 2}};
  CHECK(isomorphic(graphic_matroid(3, k3), uniform_matroid(2, 3)));
  std::vector<std::pair<int, int>> edge{{0, 1}};
  auto e = graphic_matroid(2, edge);
  CHECK(e.size() == 2);
  CHECK(e.rank() == 1);
  std::vector<std::pair<int, int>> parallel{{0, 1}, {0, 1}};
  auto par = graphic_matroid(2, parallel);
  CHECK(par.size() == 2);
  CHECK(par.ground_labels(par.atoms()[0]) == std::vector<int>{0, 1});
  std::vector<std::pair<int, int>> many(11, {0, 1});
  CHECK(kind_of([&] { graphic_matroid(2, many); }) == ErrorKind::SizeLimit);
}

TEST_CASE("canonical flat order") {
  auto b2 = boolean_matroid(2);
  CHECK(b2.ground_labels(0).empty());
  CHECK(b2.ground_labels(1) == std::vector<int>{0});
  CHECK(b2.ground_labels(2) == std::vector<int>{1});
  CHECK(b2.ground_labels(3) == std::vector<int>{0, 1});
  for (const auto& nm : testing_support::all_matroids()) {
    const auto& m = nm.matroid;
    CHECK(m.rank(m.bottom()) == 0);
    CHECK(m.rank(m.top()) == m.rank());
    for (FlatId f = 1; f < m.size(); ++f) CHECK(m.rank(f - 1) <= m.rank(f));
  }
}

TEST_CASE("minors") {
  auto b3 = boolean_matroid(3);
  CHECK(isomorphic(restriction(b3, b3.top()), b3));
  CHECK(restriction(b3, flat_with(b3, {0})).rank() == 1);
  CHECK(isomorphic(restriction(b3, flat_with(b3, {0, 1})), boolean_matroid(2)));
  CHECK(isomorphic(contraction(b3, b3.bottom()), b3));
  auto top = contraction(b3, b3.top());
  CHECK(top.size() == 1);
  CHECK(top.rank() == 0);
  CHECK(isomorphic(contraction(b3, flat_with(b3, {2})), boolean_matroid(2)));

  CHECK(isomorphic(truncation(b3), uniform_matroid(2, 3)));
  auto r1 = truncation(uniform_matroid(1, 2));
  CHECK(r1.rank() == 0);
  CHECK(r1.size() == 1);
  auto tu = truncation(uniform_matroid(2, 3));
  CHECK(tu.rank() == 1);
  CHECK(tu.size() == 2);
  CHECK(kind_of([&] { truncation(r1); }) == ErrorKind::RankZero);

  auto map = contraction_map(b3, flat_with(b3, {0}));
  for (FlatId c = 0; c < map.matroid.size(); ++c) {
    CHECK(*map.from_parent[map.to_parent[c]] == c);
    CHECK(map.matroid.rank(c) == b3.rank(map.to_parent[c]) - 1);
  }
}

TEST_CASE("property: families validate, minors behave, witness search agrees") {
  std::vector<MatroidLattice> family;
  for (int n = 1; n <= 6; ++n) family.push_back(boolean_matroid(n));
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= n; ++r) family.push_back(uniform_matroid(r, n));
  }
  for (int v = 2; v <= 4; ++v) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) all.emplace_back(a, b);
    }
    for (std::uint32_t mask = 1; mask < (1U << all.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1U) edges.push_back(all[i]);
      }
      family.push_back(graphic_matroid(v, edges));
    }
  }
  for (const auto& m : family) {
    CHECK_NOTHROW(validate_matroid(as_candidate(m)));
    CHECK_FALSE(find_submodularity_violation(m).has_value());
    CHECK(isomorphic(restriction(m, m.top()), m));
    CHECK(isomorphic(contraction(m, m.bottom()), m));
    if (m.rank() > 0) {
      auto t = truncation(m);
      CHECK(t.rank() == m.rank() - 1);
      const auto corank1 = m.flats_of_rank(m.rank() - 1).size();
      CHECK(t.size() == m.size() - (m.rank() == 1 ? 1 : corank1));
    }
  }
}
