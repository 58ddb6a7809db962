#include "chow/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "chow/error.hpp"
#include "chow/linalg.hpp"

namespace chow {

namespace {

struct Overflow {};

inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t p;
  std::int64_t r;
  if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline Integer sub_mul(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(const Integer& v) { return v; }

template <class T>
using Row = std::vector<std::pair<std::uint32_t, T>>;

/// Sparse row reduction over Z restricted to unit pivots. Pivot rows are kept
/// reduced against earlier pivots while running and fully reduced by
/// finish().
template <class T>
class Eliminator {
 public:
  explicit Eliminator(std::size_t cols)
      : pivot_of_col_(cols, -1), acc_(cols, T(0)), touched_(cols, 0) {}

  void add_row(const Row<T>& row) {
    Row<T> reduced = reduce(row);
    if (reduced.empty()) return;
    if (!try_pivot(reduced)) stash_.push_back(std::move(reduced));
  }

  void finish() {
    bool progress = true;
    while (progress && !stash_.empty()) {
      progress = false;
      std::vector<Row<T>> keep;
      for (auto& row : stash_) {
        Row<T> reduced = reduce(row);
        if (reduced.empty()) continue;
        if (try_pivot(reduced)) {
          progress = true;
        } else {
          keep.push_back(std::move(reduced));
        }
      }
      stash_ = std::move(keep);
    }
    // Rows still stashed were last reduced before any later pivot existed.
    for (auto& row : stash_) row = reduce(row);
    std::erase_if(stash_, [](const Row<T>& r) { return r.empty(); });

    for (std::size_t k = pivots_.size(); k-- > 0;) {
      load(pivots_[k]);
      for (const auto& [col, v] : pivots_[k]) {
        const int q = pivot_of_col_[col];
        if (q < 0 || static_cast<std::size_t>(q) == k) continue;
        const T f = acc_[col];
        if (f == 0) continue;
        for (const auto& [c2, v2] : pivots_[static_cast<std::size_t>(q)]) {
          touch(c2);
          acc_[c2] = sub_mul(acc_[c2], f, v2);
        }
      }
      pivots_[k] = collect();
    }
  }

  const std::vector<Row<T>>& pivots() const { return pivots_; }
  const std::vector<std::uint32_t>& pivot_columns() const { return pivot_col_; }
  const std::vector<int>& pivot_of_col() const { return pivot_of_col_; }
  const std::vector<Row<T>>& leftover() const { return stash_; }

 private:
  void touch(std::uint32_t c) {
    if (!touched_[c]) {
      touched_[c] = 1;
      touched_list_.push_back(c);
    }
  }

  void load(const Row<T>& row) {
    for (const auto& [c, v] : row) {
      touch(c);
      acc_[c] = v;
    }
  }

  Row<T> collect() {
    std::sort(touched_list_.begin(), touched_list_.end());
    Row<T> out;
    for (auto c : touched_list_) {
      if (acc_[c] != 0) out.emplace_back(c, acc_[c]);
      acc_[c] = T(0);
      touched_[c] = 0;
    }
    touched_list_.clear();
    return out;
  }

  Row<T> reduce(const Row<T>& row) {
    // Pivots are applied in creation order; a pivot row only contains pivot
    // columns created after it, so one pass suffices.
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    std::vector<int> queued;
    auto enqueue = [&](std::uint32_t c) {
      const int q = pivot_of_col_[c];
      if (q >= 0 && !in_heap_[static_cast<std::size_t>(q)]) {
        in_heap_[static_cast<std::size_t>(q)] = 1;
        queued.push_back(q);
        heap.push(q);
      }
    };
    for (const auto& [c, v] : row) {
      touch(c);
      acc_[c] = v;
      enqueue(c);
    }
    while (!heap.empty()) {
      const int k = heap.top();
      heap.pop();
      const std::uint32_t c = pivot_col_[static_cast<std::size_t>(k)];
      const T f = acc_[c];
      if (f == 0) continue;
      for (const auto& [c2, v2] : pivots_[static_cast<std::size_t>(k)]) {
        touch(c2);
        acc_[c2] = sub_mul(acc_[c2], f, v2);
        if (c2 != c && acc_[c2] != 0) enqueue(c2);
      }
    }
    for (int q : queued) in_heap_[static_cast<std::size_t>(q)] = 0;
    return collect();
  }

  bool try_pivot(Row<T>& row) {
    for (std::size_t i = row.size(); i-- > 0;) {
      if (!is_unit(row[i].second)) continue;
      if (row[i].second < 0) {
        for (auto& e : row) e.second = -e.second;
      }
      const auto k = static_cast<int>(pivots_.size());
      pivot_of_col_[row[i].first] = k;
      pivot_col_.push_back(row[i].first);
      pivots_.push_back(std::move(row));
      in_heap_.push_back(0);
      return true;
    }
    return false;
  }

  std::vector<int> pivot_of_col_;
  std::vector<std::uint32_t> pivot_col_;
  std::vector<Row<T>> pivots_;
  std::vector<Row<T>> stash_;
  std::vector<T> acc_;
  std::vector<char> touched_;
  std::vector<std::uint32_t> touched_list_;
  std::vector<char> in_heap_;
};

struct BlockResult {
  std::vector<int> pivot_of_col;
  std::vector<Row<Integer>> pivots;
  std::vector<Row<Integer>> leftover;
};

template <class T>
BlockResult eliminate(std::size_t cols, const std::vector<Row<Integer>>& rows) {
  Eliminator<T> e(cols);
  for (const auto& r : rows) {
    Row<T> row;
    row.reserve(r.size());
    for (const auto& [c, v] : r) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        if (!v.fits_slong_p()) throw Overflow{};
        row.emplace_back(c, v.get_si());
      } else {
        row.emplace_back(c, v);
      }
    }
    e.add_row(row);
  }
  e.finish();
  BlockResult out;
  out.pivot_of_col = e.pivot_of_col();
  auto convert = [](const Row<T>& r) {
    Row<Integer> o;
    o.reserve(r.size());
    for (const auto& [c, v] : r) o.emplace_back(c, to_integer(v));
    return o;
  };
  for (const auto& r : e.pivots()) out.pivots.push_back(convert(r));
  for (const auto& r : e.leftover()) out.leftover.push_back(convert(r));
  return out;
}

}  // namespace

RelationOracle::RelationOracle(RingContext ctx, std::size_t column_limit)
    : ctx_(std::move(ctx)), column_limit_(column_limit) {
  Level zero;
  zero.component.push_back(ctx_.unit_component());
  zero.representative.emplace_back();
  levels_.push_back(std::move(zero));
  OracleDegree info;
  info.rank = 1;
  info.columns = 1;
  info_.push_back(info);
}

const OracleDegree& RelationOracle::degree(int d) {
  if (d < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  while (static_cast<int>(info_.size()) <= d) {
    if (!info_.back().torsion_free) {
      throw Error(ErrorKind::Internal, "degree " + std::to_string(info_.back().degree) +
                                           " has torsion; higher degrees are not presented");
    }
    build_next();
  }
  return info_[static_cast<std::size_t>(d)];
}

void RelationOracle::build_next() {
  const std::size_t d = levels_.size();
  const auto& gens = ctx_.generators();
  const std::size_t G = gens.size();
  Level& prev = levels_[d - 1];
  const std::size_t n_prev = prev.component.size();
  const std::size_t ncols = n_prev * G;
  if (ncols > column_limit_) {
    throw Error(ErrorKind::SizeLimit, "degree " + std::to_string(d) + " presentation needs " +
                                          std::to_string(ncols) + " columns (limit " +
                                          std::to_string(column_limit_) + ")");
  }

  // Blocks by grading component, numbered in order of first appearance.
  std::map<ElementId, std::uint32_t> block_of_component;
  std::vector<ElementId> block_component;
  std::vector<std::uint32_t> col_block(ncols);
  std::vector<std::uint32_t> col_local(ncols);
  std::vector<std::vector<std::uint32_t>> block_cols;
  for (std::size_t c = 0; c < n_prev; ++c) {
    for (std::size_t j = 0; j < G; ++j) {
      const ElementId comp = ctx_.combine_component(prev.component[c], gens[j]);
      auto [it, inserted] =
          block_of_component.try_emplace(comp, static_cast<std::uint32_t>(block_cols.size()));
      if (inserted) {
        block_cols.emplace_back();
        block_component.push_back(comp);
      }
      const std::size_t col = c * G + j;
      col_block[col] = it->second;
      col_local[col] = static_cast<std::uint32_t>(block_cols[it->second].size());
      block_cols[it->second].push_back(static_cast<std::uint32_t>(col));
    }
  }

  std::vector<std::vector<Row<Integer>>> block_rows(block_cols.size());
  std::size_t relation_count = 0;
  auto emit = [&](const std::map<std::size_t, Integer>& entries) {
    Row<Integer> row;
    std::uint32_t block = 0;
    bool first = true;
    for (const auto& [col, v] : entries) {
      if (v == 0) continue;
      if (first) {
        block = col_block[col];
        first = false;
      } else if (col_block[col] != block) {
        throw Error(ErrorKind::Internal, "relation straddles two grading components");
      }
      row.emplace_back(col_local[col], v);
    }
    if (row.empty()) return;
    std::sort(row.begin(), row.end());
    block_rows[block].push_back(std::move(row));
    ++relation_count;
  };

  if (d == 1 || d == 2) {
    for (const auto& rel : ctx_.relations()) {
      const auto deg = rel.degree();
      if (!deg || *deg != d) continue;
      std::map<std::size_t, Integer> entries;
      for (const auto& [m, coeff] : rel.terms()) {
        auto f = m.factors();
        if (d == 1) {
          entries[static_cast<std::size_t>(ctx_.generator_position(f[0].gen))] += coeff;
          continue;
        }
        const GenId g1 = f[0].gen;
        const GenId g2 = f.size() == 1 ? f[0].gen : f[1].gen;
        const auto j = static_cast<std::size_t>(ctx_.generator_position(g2));
        const auto& first = levels_[0].mult[static_cast<std::size_t>(ctx_.generator_position(g1))];
        for (const auto& [k, v] : first) entries[k * G + j] += coeff * v;
      }
      emit(entries);
    }
  }
  if (d >= 2) {
    const Level& base = levels_[d - 2];
    for (std::size_t b = 0; b < base.component.size(); ++b) {
      for (std::size_t i = 0; i < G; ++i) {
        const auto& bi = base.mult[b * G + i];
        for (std::size_t j = i + 1; j < G; ++j) {
          const auto& bj = base.mult[b * G + j];
          if (bi.empty() && bj.empty()) continue;
          std::map<std::size_t, Integer> entries;
          for (const auto& [k, v] : bi) entries[k * G + j] += v;
          for (const auto& [k, v] : bj) entries[k * G + i] -= v;
          emit(entries);
        }
      }
    }
  }

  OracleDegree info;
  info.degree = static_cast<int>(d);
  info.columns = ncols;
  info.relations = relation_count;

  std::vector<BlockResult> results(block_cols.size());
  for (std::size_t b = 0; b < block_cols.size(); ++b) {
    try {
      results[b] = eliminate<std::int64_t>(block_cols[b].size(), block_rows[b]);
    } catch (const Overflow&) {
      results[b] = eliminate<Integer>(block_cols[b].size(), block_rows[b]);
    }
    block_rows[b].clear();
    block_rows[b].shrink_to_fit();
  }

  Level next;
  std::vector<std::vector<std::uint32_t>> new_index(block_cols.size());
  for (std::size_t b = 0; b < block_cols.size(); ++b) {
    const auto& res = results[b];
    new_index[b].assign(block_cols[b].size(), UINT32_MAX);
    std::size_t free_cols = 0;
    for (std::size_t l = 0; l < block_cols[b].size(); ++l) {
      if (res.pivot_of_col[l] >= 0) continue;
      ++free_cols;
      new_index[b][l] = static_cast<std::uint32_t>(next.component.size());
      const std::size_t col = block_cols[b][l];
      next.component.push_back(block_component[b]);
      next.representative.push_back(
          prev.representative[col / G] * Monomial::generator(gens[col % G]));
    }
    if (!res.leftover.empty()) {
      std::vector<std::uint32_t> used;
      for (const auto& r : res.leftover) {
        for (const auto& [c, v] : r) used.push_back(c);
      }
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      IntMatrix m(res.leftover.size(), used.size());
      for (std::size_t i = 0; i < res.leftover.size(); ++i) {
        for (const auto& [c, v] : res.leftover[i]) {
          auto pos = std::lower_bound(used.begin(), used.end(), c) - used.begin();
          m(i, static_cast<std::size_t>(pos)) = v;
        }
      }
      auto inv = smith_invariants(m);
      bool torsion = false;
      for (const auto& x : inv) {
        if (x != 1) {
          torsion = true;
          info.torsion.push_back(x);
        }
      }
      if (!torsion) {
        throw Error(ErrorKind::Internal,
                    "degree " + std::to_string(d) +
                        " needs non-unit pivots; the oracle does not support this presentation");
      }
      info.torsion_free = false;
      info.rank += free_cols - inv.size();
    } else {
      info.rank += free_cols;
    }
  }

  if (info.torsion_free) {
    prev.mult.assign(ncols, {});
    for (std::size_t col = 0; col < ncols; ++col) {
      const std::uint32_t b = col_block[col];
      const std::uint32_t l = col_local[col];
      const auto& res = results[b];
      auto& out = prev.mult[col];
      const int q = res.pivot_of_col[l];
      if (q < 0) {
        out.emplace_back(new_index[b][l], Integer(1));
        continue;
      }
      for (const auto& [c2, v] : res.pivots[static_cast<std::size_t>(q)]) {
        if (c2 == l) continue;
        out.emplace_back(new_index[b][c2], -v);
      }
      std::sort(out.begin(), out.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }
  levels_.push_back(std::move(next));
  info_.push_back(std::move(info));
}

void RelationOracle::multiply_into(const SparseVec& v, std::size_t level, int gen_pos,
                                   SparseVec& out) const {
  const std::size_t G = ctx_.generators().size();
  std::map<std::uint32_t, Integer> acc;
  for (const auto& [c, x] : v) {
    for (const auto& [k, y] : levels_[level].mult[c * G + static_cast<std::size_t>(gen_pos)]) {
      acc[k] += x * y;
    }
  }
  out.clear();
  for (auto& [k, x] : acc) {
    if (x != 0) out.emplace_back(k, std::move(x));
  }
}

std::vector<Integer> RelationOracle::coordinates(const Monomial& m) {
  const int d = static_cast<int>(m.degree());
  const auto& info = degree(d);
  if (!info.torsion_free) {
    throw Error(ErrorKind::Internal, "coordinates unavailable in a degree with torsion");
  }
  if (d > 0) degree(d);  // mult tables of level d-1 exist once level d is built
  SparseVec v{{0, Integer(1)}};
  SparseVec next;
  std::size_t level = 0;
  for (const auto& f : m.factors()) {
    const int pos = ctx_.generator_position(f.gen);
    if (pos < 0) {
      throw Error(ErrorKind::UnknownFlat, "h[" + std::to_string(f.gen) + "] is not a generator");
    }
    for (std::uint32_t e = 0; e < f.exp; ++e) {
      multiply_into(v, level, pos, next);
      std::swap(v, next);
      ++level;
    }
  }
  std::vector<Integer> out(info.rank);
  for (auto& [k, x] : v) out[k] = std::move(x);
  return out;
}

std::vector<Integer> RelationOracle::coordinates(const Polynomial& p, int d) {
  std::vector<Integer> out(degree(d).rank);
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<int>(m.degree()) != d) {
      throw Error(ErrorKind::NotHomogeneous, "term " + to_string(m) + " is not of degree " +
                                                 std::to_string(d));
    }
    auto v = coordinates(m);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
  }
  return out;
}

ElementId RelationOracle::basis_component(int d, std::size_t i) {
  degree(d);
  return levels_[static_cast<std::size_t>(d)].component.at(i);
}

const Monomial& RelationOracle::basis_representative(int d, std::size_t i) {
  degree(d);
  return levels_[static_cast<std::size_t>(d)].representative.at(i);
}

BasisCertificate certify_basis(RelationOracle& oracle, std::span<const Monomial> monomials,
                               int d) {
  BasisCertificate cert;
  const auto& info = oracle.degree(d);
  if (!info.torsion_free) {
    cert.ok = false;
    cert.detail = "degree " + std::to_string(d) + " has torsion";
    return cert;
  }
  if (monomials.size() != info.rank) {
    cert.ok = false;
    cert.detail = std::to_string(monomials.size()) + " monomials for rank " +
                  std::to_string(info.rank) + " in degree " + std::to_string(d);
    return cert;
  }
  // Group basis indices and monomials by grading component.
  std::map<ElementId, std::vector<std::size_t>> basis_by_comp;
  for (std::size_t i = 0; i < info.rank; ++i) {
    basis_by_comp[oracle.basis_component(d, i)].push_back(i);
  }
  std::map<ElementId, std::vector<std::vector<Integer>>> rows_by_comp;
  for (const auto& m : monomials) {
    auto coords = oracle.coordinates(m);
    rows_by_comp[oracle.context().component_of(m)].push_back(std::move(coords));
  }
  for (const auto& [comp, idx] : basis_by_comp) {
    auto it = rows_by_comp.find(comp);
    const std::size_t have = it == rows_by_comp.end() ? 0 : it->second.size();
    if (have != idx.size()) {
      cert.ok = false;
      cert.detail = "component " + std::to_string(comp) + " has " + std::to_string(have) +
                    " monomials for rank " + std::to_string(idx.size());
      return cert;
    }
    IntMatrix m(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const auto& coords = it->second[r];
      Integer outside = 0;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0 && oracle.basis_component(d, i) != comp) outside += 1;
      }
      if (outside != 0) {
        cert.ok = false;
        cert.detail = "monomial coordinates leave component " + std::to_string(comp);
        return cert;
      }
      for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = coords[idx[c]];
    }
    Integer det = determinant(std::move(m));
    if (det != 1 && det != -1) {
      cert.ok = false;
      cert.detail = "component " + std::to_string(comp) + " has determinant " + det.get_str();
      return cert;
    }
  }
  for (const auto& [comp, rows] : rows_by_comp) {
    if (!basis_by_comp.count(comp)) {
      cert.ok = false;
      cert.detail = "monomials in component " + std::to_string(comp) + " which has rank 0";
      return cert;
    }
  }
  return cert;
}

}  // namespace chow
