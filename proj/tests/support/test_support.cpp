#include "test_support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chow/matroid_io.hpp"

namespace testing_support {

std::vector<NamedMatroid> fixed_matroids() {
  std::vector<NamedMatroid> out;
  for (int n = 2; n <= 5; ++n) out.push_back({"B" + std::to_string(n), boolean_matroid(n)});
  out.push_back({"U23", uniform_matroid(2, 3)});
  out.push_back({"U24", uniform_matroid(2, 4)});
  out.push_back({"U35", uniform_matroid(3, 5)});
  out.push_back({"K4", complete_graph_matroid(4)});
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<NamedMatroid> random_matroids() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(CHOW_TEST_DATA)) {
    const auto name = e.path().filename().string();
    if (name.rfind("random_", 0) == 0) files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedMatroid> out;
  for (const auto& f : files) {
    out.push_back({std::filesystem::path(f).stem().string(), parse_matroid_json(read_file(f))});
  }
  return out;
}

std::vector<NamedMatroid> all_matroids() {
  auto out = fixed_matroids();
  for (auto& m : random_matroids()) out.push_back(std::move(m));
  return out;
}

FlatId flat_with(const MatroidLattice& m, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  for (FlatId f = 0; f < m.size(); ++f) {
    if (m.ground_labels(f) == labels) return f;
  }
  throw std::runtime_error("no such flat");
}

bool isomorphic(const MatroidLattice& a, const MatroidLattice& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  const std::size_t n = a.size();
  std::vector<FlatId> image(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (FlatId y = 0; y < n; ++y) {
      if (used[y] || a.rank(static_cast<FlatId>(i)) != b.rank(y)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const auto x = static_cast<FlatId>(i);
        const auto w = static_cast<FlatId>(j);
        ok = a.leq(x, w) == b.leq(y, image[j]) && a.leq(w, x) == b.leq(image[j], y);
      }
      if (!ok) continue;
      used[y] = 1;
      image[i] = y;
      if (extend(i + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(0);
}

FlatId label_join(const MatroidLattice& m, FlatId a, FlatId b) {
  std::vector<int> u;
  const auto& la = m.ground_labels(a);
  const auto& lb = m.ground_labels(b);
  std::set_union(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(u));
  FlatId best = m.top();
  for (FlatId f = 0; f < m.size(); ++f) {
    const auto& lf = m.ground_labels(f);
    if (std::includes(lf.begin(), lf.end(), u.begin(), u.end()) &&
        lf.size() < m.ground_labels(best).size()) {
      best = f;
    }
  }
  return best;
}

bool naive_hall_rado(const MatroidLattice& m, const std::vector<FlatId>& flats, int slack) {
  const std::size_t r = flats.size();
  for (std::uint32_t mask = 1; mask < (1U << r); ++mask) {
    FlatId j = m.bottom();
    int size = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if ((mask >> i) & 1U) {
        j = label_join(m, j, flats[i]);
        ++size;
      }
    }
    if (m.rank(j) < size + slack) return false;
  }
  return true;
}

int naive_degree(const RingContext& ctx, const Monomial& mono) {
  const int top = *ctx.top_degree();
  if (static_cast<int>(mono.degree()) != top) return 0;
  std::vector<FlatId> flats;
  for (const auto& f : mono.factors()) {
    for (std::uint32_t e = 0; e < f.exp; ++e) flats.push_back(f.gen);
  }
  return naive_hall_rado(ctx.matroid(), flats, ctx.mode() == RingMode::augmented ? 0 : 1) ? 1 : 0;
}

Polynomial naive_x_element(const RingContext& ctx, FlatId g) {
  const auto& m = ctx.matroid();
  std::vector<FlatId> outside;
  for (FlatId a = 0; a < m.size(); ++a) {
    if (m.rank(a) == 1 && !m.leq(a, g)) outside.push_back(a);
  }
  Polynomial out;
  for (std::uint32_t mask = 0; mask < (1U << outside.size()); ++mask) {
    FlatId j = g;
    int size = 0;
    for (std::size_t i = 0; i < outside.size(); ++i) {
      if ((mask >> i) & 1U) {
        j = label_join(m, j, outside[i]);
        ++size;
      }
    }
    if (j == m.bottom()) continue;
    out.add_term(Monomial::generator(j), size % 2 == 0 ? -1 : 1);
  }
  return out;
}

std::vector<Monomial> free_monomials(const RingContext& ctx, int d) {
  std::vector<Monomial> out;
  const auto& gens = ctx.generators();
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      std::vector<Factor> f;
      for (auto i : idx) f.push_back({gens[i], 1});
      out.push_back(Monomial::from_factors(f));
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      idx.push_back(i);
      rec(i, left - 1);
      idx.pop_back();
    }
  };
  rec(0, d);
  return out;
}

std::size_t dimension_mod_p(const RingContext& ctx, int d, std::uint32_t p) {
  const auto cols = free_monomials(ctx, d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& rel : ctx.relations()) {
    const int k = d - static_cast<int>(*rel.degree());
    if (k < 0) continue;
    for (const auto& m : free_monomials(ctx, k)) {
      std::vector<std::uint64_t> row(cols.size(), 0);
      for (const auto& [t, c] : rel.terms()) {
        Integer v = c % p;
        if (v < 0) v += p;
        auto& slot = row[index.at(t * m)];
        slot = (slot + v.get_ui()) % p;
      }
      rows.push_back(std::move(row));
    }
  }
  auto inverse = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = inverse(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t k = c; k < cols.size(); ++k) {
        rows[i][k] = (rows[i][k] + (p - f) * rows[rank][k]) % p;
      }
    }
    ++rank;
  }
  return cols.size() - rank;
}

std::size_t count_chain_monomials(const RingContext& ctx, int d) {
  std::size_t n = 0;
  for (const auto& m : free_monomials(ctx, d)) {
    if (ctx.is_chain(m)) ++n;
  }
  return n;
}

Polynomial random_polynomial(const RingContext& ctx, int max_degree, int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& gens = ctx.generators();
  Polynomial out;
  for (int t = 0; t < terms; ++t) {
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<Factor> f;
    for (int i = 0; i < d && !gens.empty(); ++i) f.push_back({gens[rng() % gens.size()], 1});
    out.add_term(Monomial::from_factors(f), Integer(static_cast<long>(rng() % 9) - 4));
  }
  return out;
}

}  // namespace testing_support
