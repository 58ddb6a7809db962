#include "chow/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "chow/error.hpp"

namespace chow {

namespace {

std::string label_string(const std::vector<int>& labels) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
  out << '}';
  return out.str();
}

std::string name_of(const CandidateLattice& c, ElementId x) {
  if (!c.ground_labels.empty() && !c.ground_labels[x].empty()) {
    return label_string(c.ground_labels[x]);
  }
  return "#" + std::to_string(x);
}

std::vector<std::size_t> down_counts(const Poset& p) {
  std::vector<std::size_t> counts(p.size());
  for (ElementId x = 0; x < p.size(); ++x) {
    std::size_t n = 0;
    for (auto w : p.down_set(x)) n += static_cast<std::size_t>(std::popcount(w));
    counts[x] = n;
  }
  return counts;
}

}  // namespace

struct MatroidBuilder {
  /// Sorts into canonical order and fills all tables. `full` enables the
  /// atomic and submodular checks; lattice and rank checks always run since
  /// the tables depend on them. `order_out[i]` is the input index of new
  /// element i.
  static MatroidLattice build(CandidateLattice c, bool full, std::vector<ElementId>* order_out);
};

namespace {
MatroidLattice build(CandidateLattice c, bool full, std::vector<ElementId>* order_out) {
  return MatroidBuilder::build(std::move(c), full, order_out);
}
}  // namespace

std::vector<FlatId> MatroidLattice::flats_of_rank(int r) const {
  std::vector<FlatId> out;
  for (FlatId f = 0; f < size(); ++f) {
    if (rank_[f] == r) out.push_back(f);
  }
  return out;
}

std::string MatroidLattice::flat_name(FlatId f) const {
  if (!labels_.empty() && !labels_[f].empty()) return label_string(labels_[f]);
  if (f == bottom()) return "{}";
  return "#" + std::to_string(f);
}

MatroidLattice validate_matroid(CandidateLattice candidate) {
  return build(std::move(candidate), true, nullptr);
}

MatroidLattice trusted_matroid(CandidateLattice candidate) {
#ifdef NDEBUG
  return build(std::move(candidate), false, nullptr);
#else
  return build(std::move(candidate), true, nullptr);
#endif
}

MatroidLattice MatroidBuilder::build(CandidateLattice c, bool full,
                                     std::vector<ElementId>* order_out) {
  const std::size_t n = c.order.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "a matroid lattice must be nonempty");
  if (n > kMaxPosetSize) {
    throw Error(ErrorKind::SizeLimit, std::to_string(n) + " flats exceeds the limit of " +
                                          std::to_string(kMaxPosetSize));
  }
  if (c.rank.size() != n) throw Error(ErrorKind::InvalidParams, "one rank per element required");
  if (!c.ground_labels.empty() && c.ground_labels.size() != n) {
    throw Error(ErrorKind::InvalidParams, "one label set per element required");
  }
  for (auto& l : c.ground_labels) std::sort(l.begin(), l.end());

  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (c.rank[a] != c.rank[b]) return c.rank[a] < c.rank[b];
    if (!c.ground_labels.empty() && c.ground_labels[a] != c.ground_labels[b]) {
      return c.ground_labels[a] < c.ground_labels[b];
    }
    return false;
  });
  CandidateLattice s;
  s.order = c.order.reindexed(order);
  s.rank.resize(n);
  if (!c.ground_labels.empty()) s.ground_labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.rank[i] = c.rank[order[i]];
    if (!c.ground_labels.empty()) s.ground_labels[i] = std::move(c.ground_labels[order[i]]);
  }
  if (order_out) *order_out = order;

  MatroidLattice m;
  try {
    m.lattice_ = MeetSemilattice::from_poset(s.order);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotALattice, "missing meet: " + e.detail());
  }
  const auto& poset = m.lattice_.poset();
  auto maximal = poset.maximal_elements();
  if (maximal.size() != 1) {
    throw Error(ErrorKind::NotALattice, "lattice needs a unique maximal element");
  }
  Poset op = poset.opposite();
  auto op_counts = down_counts(op);
  m.join_.assign(n * n, 0);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x; y < n; ++y) {
      ElementId j = greatest_lower_bound(op, x, y, op_counts);
      if (j == n) {
        throw Error(ErrorKind::NotALattice,
                    "flats " + name_of(s, x) + " and " + name_of(s, y) + " have no join");
      }
      m.join_[x * n + y] = static_cast<std::uint16_t>(j);
      m.join_[y * n + x] = static_cast<std::uint16_t>(j);
    }
  }

  const ElementId bottom = m.lattice_.bottom();
  if (s.rank[bottom] != 0) {
    throw Error(ErrorKind::NotRanked, "the minimal flat must have rank 0");
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y : m.lattice_.covers(x)) {
      if (s.rank[y] != s.rank[x] + 1) {
        throw Error(ErrorKind::NotRanked, "cover " + name_of(s, x) + " < " + name_of(s, y) +
                                              " jumps rank from " + std::to_string(s.rank[x]) +
                                              " to " + std::to_string(s.rank[y]));
      }
    }
  }
  // Ranked with a rank-0 bottom: bottom is element 0 and the top is last.
  m.rank_ = std::move(s.rank);
  m.labels_ = std::move(s.ground_labels);
  for (ElementId x : m.lattice_.covers(bottom)) m.atoms_.push_back(x);
  std::sort(m.atoms_.begin(), m.atoms_.end());

  if (full) {
    for (ElementId f = 0; f < n; ++f) {
      ElementId j = bottom;
      for (ElementId a : m.atoms_) {
        if (poset.leq(a, f)) j = m.join(j, a);
      }
      if (j != f) {
        throw Error(ErrorKind::NotAtomic, "flat " + m.flat_name(f) +
                                              " is not the join of the atoms below it");
      }
    }
    if (auto bad = find_submodularity_violation(m)) {
      auto [f, g] = *bad;
      throw Error(ErrorKind::NotSubmodular,
                  "rk(" + m.flat_name(f) + " v " + m.flat_name(g) + ") + rk(" + m.flat_name(f) +
                      " ^ " + m.flat_name(g) + ") = " +
                      std::to_string(m.rank(m.join(f, g)) + m.rank(m.meet(f, g))) + " > " +
                      std::to_string(m.rank(f) + m.rank(g)) + " = rk(" + m.flat_name(f) +
                      ") + rk(" + m.flat_name(g) + ")");
    }
  }
  return m;
}

namespace {

CandidateLattice from_flat_sets(int ground_size, std::vector<std::vector<int>> flats) {
  for (auto& f : flats) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorKind::InputFormat, "flat " + label_string(f) + " repeats an element");
    }
    for (int e : f) {
      if (e < 0 || e >= ground_size) {
        throw Error(ErrorKind::InputFormat, "flat " + label_string(f) +
                                                " uses an element outside the ground set");
      }
    }
  }
  {
    auto sorted = flats;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::InputFormat, "duplicate flat in input");
    }
  }
  std::vector<int> full(static_cast<std::size_t>(ground_size));
  std::iota(full.begin(), full.end(), 0);
  const bool has_empty = std::any_of(flats.begin(), flats.end(), [](auto& f) { return f.empty(); });
  const bool has_full = std::any_of(flats.begin(), flats.end(), [&](auto& f) { return f == full; });
  if (!has_empty || !has_full) {
    throw Error(ErrorKind::InputFormat, "flats must include [] and the full ground set");
  }
  if (flats.size() > kMaxPosetSize) {
    throw Error(ErrorKind::SizeLimit, std::to_string(flats.size()) + " flats exceeds the limit");
  }

  CandidateLattice c;
  c.order = Poset::from_predicate(flats.size(), [&](ElementId a, ElementId b) {
    return std::includes(flats[b].begin(), flats[b].end(), flats[a].begin(), flats[a].end());
  });
  // Longest chain from the bottom, processed in order of set size.
  const std::size_t n = flats.size();
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return flats[a].size() < flats[b].size(); });
  c.rank.assign(n, 0);
  for (ElementId y : order) {
    for (ElementId x : order) {
      if (x != y && c.order.leq(x, y)) c.rank[y] = std::max(c.rank[y], c.rank[x] + 1);
    }
  }
  c.ground_labels = std::move(flats);
  return c;
}

MinorMap interval_minor(const MatroidLattice& m, std::vector<FlatId> elements,
                        std::vector<int> ranks) {
  CandidateLattice c;
  c.order = m.poset().induced(elements);
  c.rank = std::move(ranks);
  c.ground_labels.reserve(elements.size());
  for (auto f : elements) c.ground_labels.push_back(m.ground_labels(f));
  if (std::all_of(c.ground_labels.begin(), c.ground_labels.end(),
                  [](auto& l) { return l.empty(); })) {
    c.ground_labels.clear();
  }
  std::vector<ElementId> order;
#ifdef NDEBUG
  constexpr bool kFull = false;
#else
  constexpr bool kFull = true;
#endif
  MinorMap out{build(std::move(c), kFull, &order), {}, {}};
  out.to_parent.resize(order.size());
  out.from_parent.assign(m.size(), std::nullopt);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.to_parent[i] = elements[order[i]];
    out.from_parent[elements[order[i]]] = static_cast<FlatId>(i);
  }
  return out;
}

}  // namespace

MatroidLattice matroid_from_flats(int ground_size, std::vector<std::vector<int>> flats) {
  if (ground_size < 0) throw Error(ErrorKind::InputFormat, "negative ground set size");
  return validate_matroid(from_flat_sets(ground_size, std::move(flats)));
}

MatroidLattice boolean_matroid(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "boolean matroid needs n >= 1");
  if (n > 12) {
    throw Error(ErrorKind::SizeLimit, "boolean matroid of rank " + std::to_string(n) +
                                          " has more than 4096 flats");
  }
  std::vector<std::vector<int>> flats;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) f.push_back(i);
    }
    flats.push_back(std::move(f));
  }
  return matroid_from_flats(n, std::move(flats));
}

MatroidLattice uniform_matroid(int r, int n) {
  if (r <= 0 || r > n) {
    throw Error(ErrorKind::InvalidParams, "uniform matroid U_{" + std::to_string(r) + "," +
                                              std::to_string(n) + "} needs 0 < r <= n");
  }
  if (n > 24) throw Error(ErrorKind::SizeLimit, "ground set too large");
  std::size_t count = 1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) < r) ++count;
  }
  if (count > kMaxPosetSize) {
    throw Error(ErrorKind::SizeLimit, "U_{" + std::to_string(r) + "," + std::to_string(n) +
                                          "} has " + std::to_string(count) + " flats");
  }
  std::vector<std::vector<int>> flats;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) >= r && mask != (1U << n) - 1) continue;
    std::vector<int> f;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) f.push_back(i);
    }
    flats.push_back(std::move(f));
  }
  return matroid_from_flats(n, std::move(flats));
}

MatroidLattice graphic_matroid(int vertices, std::span<const std::pair<int, int>> edges) {
  if (edges.size() > 10) {
    throw Error(ErrorKind::SizeLimit, "graphic matroids are limited to 10 edges");
  }
  if (edges.empty()) throw Error(ErrorKind::InvalidParams, "graph has no edges");
  for (auto [u, w] : edges) {
    if (u < 0 || w < 0 || u >= vertices || w >= vertices) {
      throw Error(ErrorKind::InvalidParams, "edge endpoint outside the vertex range");
    }
    if (u == w) throw Error(ErrorKind::InvalidParams, "self-loops are not supported");
  }
  const auto m = static_cast<int>(edges.size());
  auto find = [](std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<int>> flats;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1U) parent[find(parent, edges[e].first)] = find(parent, edges[e].second);
    }
    bool closed = true;
    for (int e = 0; e < m && closed; ++e) {
      if (!(mask >> e & 1U) && find(parent, edges[e].first) == find(parent, edges[e].second)) {
        closed = false;
      }
    }
    if (!closed) continue;
    std::vector<int> f;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1U) f.push_back(e);
    }
    flats.push_back(std::move(f));
  }
  return matroid_from_flats(m, std::move(flats));
}

MinorMap restriction_map(const MatroidLattice& m, FlatId f) {
  if (f >= m.size()) throw Error(ErrorKind::InvalidFlat, "flat index out of range");
  std::vector<FlatId> elements;
  std::vector<int> ranks;
  for (FlatId g = 0; g < m.size(); ++g) {
    if (m.leq(g, f)) {
      elements.push_back(g);
      ranks.push_back(m.rank(g));
    }
  }
  return interval_minor(m, std::move(elements), std::move(ranks));
}

MinorMap contraction_map(const MatroidLattice& m, FlatId g) {
  if (g >= m.size()) throw Error(ErrorKind::InvalidFlat, "flat index out of range");
  std::vector<FlatId> elements;
  std::vector<int> ranks;
  for (FlatId f = 0; f < m.size(); ++f) {
    if (m.leq(g, f)) {
      elements.push_back(f);
      ranks.push_back(m.rank(f) - m.rank(g));
    }
  }
  return interval_minor(m, std::move(elements), std::move(ranks));
}

MinorMap truncation_map(const MatroidLattice& m) {
  const int r = m.rank();
  if (r == 0) throw Error(ErrorKind::RankZero, "cannot truncate a rank-0 matroid");
  std::vector<FlatId> elements;
  std::vector<int> ranks;
  for (FlatId f = 0; f < m.size(); ++f) {
    if (m.rank(f) == r - 1) continue;
    elements.push_back(f);
    ranks.push_back(f == m.top() ? r - 1 : m.rank(f));
  }
  CandidateLattice c;
  c.order = m.poset().induced(elements);
  c.rank = ranks;
  for (auto f : elements) c.ground_labels.push_back(m.ground_labels(f));
  if (std::all_of(c.ground_labels.begin(), c.ground_labels.end(),
                  [](auto& l) { return l.empty(); })) {
    c.ground_labels.clear();
  }
  // Joins change (corank-one joins become E), so this is rebuilt and checked.
  std::vector<ElementId> order;
  MinorMap out{build(std::move(c), true, &order), {}, {}};
  out.to_parent.resize(order.size());
  out.from_parent.assign(m.size(), std::nullopt);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.to_parent[i] = elements[order[i]];
    out.from_parent[elements[order[i]]] = static_cast<FlatId>(i);
  }
  return out;
}

std::optional<std::pair<FlatId, FlatId>> find_submodularity_violation(const MatroidLattice& m) {
  for (FlatId f = 0; f < m.size(); ++f) {
    for (FlatId g = f + 1; g < m.size(); ++g) {
      if (m.rank(m.join(f, g)) + m.rank(m.meet(f, g)) > m.rank(f) + m.rank(g)) {
        return std::pair{f, g};
      }
    }
  }
  return std::nullopt;
}

CandidateLattice as_candidate(const MatroidLattice& m) {
  CandidateLattice c;
  c.order = m.poset();
  for (FlatId f = 0; f < m.size(); ++f) {
    c.rank.push_back(m.rank(f));
    c.ground_labels.push_back(m.ground_labels(f));
  }
  return c;
}

}  // namespace chow
