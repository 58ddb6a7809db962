#include "chow/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "chow/error.hpp"

namespace chow {

namespace {

std::size_t popcount_row(std::span<const std::uint64_t> row) {
  std::size_t n = 0;
  for (auto w : row) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool subset_of(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

void check_size(std::size_t size) {
  if (size > kMaxPosetSize) {
    throw Error(ErrorKind::SizeLimit, "poset with " + std::to_string(size) +
                                          " elements exceeds the limit of " +
                                          std::to_string(kMaxPosetSize));
  }
}

}  // namespace

Poset::Poset(std::size_t size)
    : size_(size),
      words_((size + 63) / 64),
      down_(size * ((size + 63) / 64), 0),
      up_(size * ((size + 63) / 64), 0) {}

void Poset::set(ElementId x, ElementId y) {
  down_[row(y) + x / 64] |= std::uint64_t{1} << (x % 64);
  up_[row(x) + y / 64] |= std::uint64_t{1} << (y % 64);
}

void Poset::rebuild_up() {
  std::fill(up_.begin(), up_.end(), 0);
  for (ElementId y = 0; y < size_; ++y) {
    for (ElementId x = 0; x < size_; ++x) {
      if (leq(x, y)) up_[row(x) + y / 64] |= std::uint64_t{1} << (y % 64);
    }
  }
}

void Poset::validate() const {
  for (ElementId x = 0; x < size_; ++x) {
    if (!leq(x, x)) throw Error(ErrorKind::InvalidParams, "order is not reflexive");
    for (ElementId y = x + 1; y < size_; ++y) {
      if (leq(x, y) && leq(y, x)) {
        throw Error(ErrorKind::CycleDetected, "elements " + std::to_string(x) + " and " +
                                                  std::to_string(y) +
                                                  " are mutually comparable");
      }
    }
  }
  for (ElementId x = 0; x < size_; ++x) {
    for (ElementId y = 0; y < size_; ++y) {
      if (x != y && leq(y, x) && !subset_of(down_set(y), down_set(x))) {
        throw Error(ErrorKind::InvalidParams, "order is not transitive below element " +
                                                  std::to_string(x));
      }
    }
  }
}

Poset Poset::from_relations(std::size_t size,
                            std::span<const std::pair<ElementId, ElementId>> relations) {
  check_size(size);
  Poset p(size);
  for (ElementId x = 0; x < size; ++x) p.set(x, x);
  for (auto [x, y] : relations) {
    if (x >= size || y >= size) {
      throw Error(ErrorKind::InvalidParams, "relation (" + std::to_string(x) + ", " +
                                                std::to_string(y) + ") is out of range");
    }
    p.set(x, y);
  }
  // Warshall on down-set rows: if k <= y then down(k) is contained in down(y).
  for (ElementId k = 0; k < size; ++k) {
    const std::size_t rk = p.row(k);
    for (ElementId y = 0; y < size; ++y) {
      if (y != k && p.leq(k, y)) {
        const std::size_t ry = p.row(y);
        for (std::size_t w = 0; w < p.words_; ++w) p.down_[ry + w] |= p.down_[rk + w];
      }
    }
  }
  p.rebuild_up();
  for (ElementId x = 0; x < size; ++x) {
    for (ElementId y = x + 1; y < size; ++y) {
      if (p.leq(x, y) && p.leq(y, x)) {
        throw Error(ErrorKind::CycleDetected, "relations force " + std::to_string(x) +
                                                  " <= " + std::to_string(y) + " <= " +
                                                  std::to_string(x));
      }
    }
  }
  return p;
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size_) {
    throw Error(ErrorKind::InvalidParams, "label count does not match poset size");
  }
  labels_ = std::move(labels);
}

Poset Poset::induced(std::span<const ElementId> elements) const {
  Poset p(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (leq(elements[i], elements[j])) {
        p.set(static_cast<ElementId>(i), static_cast<ElementId>(j));
      }
    }
  }
  if (!labels_.empty()) {
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (auto e : elements) labels.push_back(labels_[e]);
    p.labels_ = std::move(labels);
  }
  return p;
}

Poset Poset::reindexed(std::span<const ElementId> order) const {
  if (order.size() != size_) {
    throw Error(ErrorKind::InvalidParams, "reindexing must be a permutation");
  }
  return induced(order);
}

Poset Poset::opposite() const {
  Poset p(size_);
  p.down_ = up_;
  p.up_ = down_;
  p.labels_ = labels_;
  return p;
}

std::vector<ElementId> Poset::minimal_elements() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size_; ++x) {
    if (popcount_row(down_set(x)) == 1) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> Poset::maximal_elements() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size_; ++x) {
    if (popcount_row(up_set(x)) == 1) out.push_back(x);
  }
  return out;
}

ElementId greatest_lower_bound(const Poset& p, ElementId x, ElementId y,
                               std::span<const std::size_t> down_counts) {
  const auto n = static_cast<ElementId>(p.size());
  if (p.leq(x, y)) return x;
  if (p.leq(y, x)) return y;
  auto dx = p.down_set(x);
  auto dy = p.down_set(y);
  std::vector<std::uint64_t> lower(p.words());
  bool any = false;
  for (std::size_t w = 0; w < lower.size(); ++w) {
    lower[w] = dx[w] & dy[w];
    any = any || lower[w] != 0;
  }
  if (!any) return n;
  // The greatest lower bound, if it exists, has the largest down-set.
  ElementId best = n;
  for (std::size_t w = 0; w < lower.size(); ++w) {
    for (auto bits = lower[w]; bits != 0; bits &= bits - 1) {
      auto z = static_cast<ElementId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      if (best == n || down_counts[z] > down_counts[best]) best = z;
    }
  }
  return subset_of(lower, p.down_set(best)) ? best : n;
}

std::vector<std::vector<ElementId>> cover_relation(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<ElementId>> covers(n);
  std::vector<std::uint64_t> strictly_above(p.words());
  for (ElementId x = 0; x < n; ++x) {
    auto up = p.up_set(x);
    std::copy(up.begin(), up.end(), strictly_above.begin());
    strictly_above[x / 64] &= ~(std::uint64_t{1} << (x % 64));
    for (ElementId y = 0; y < n; ++y) {
      if (y == x || !p.leq(x, y)) continue;
      // y covers x iff the only element of (x, y] below y is y itself.
      auto dy = p.down_set(y);
      std::size_t between = 0;
      for (std::size_t w = 0; w < strictly_above.size(); ++w) {
        between += static_cast<std::size_t>(std::popcount(strictly_above[w] & dy[w]));
      }
      if (between == 1) covers[x].push_back(y);
    }
  }
  return covers;
}

MeetSemilattice MeetSemilattice::from_poset(Poset poset) {
  const std::size_t n = poset.size();
  check_size(n);
  auto minimal = poset.minimal_elements();
  if (minimal.size() != 1) {
    if (minimal.size() >= 2) {
      throw Error(ErrorKind::NotASemilattice,
                  "elements " + std::to_string(minimal[0]) + " and " +
                      std::to_string(minimal[1]) + " have no common lower bound");
    }
    throw Error(ErrorKind::NotASemilattice, "empty poset has no minimal element");
  }
  std::vector<std::size_t> down_counts(n);
  for (ElementId x = 0; x < n; ++x) down_counts[x] = popcount_row(poset.down_set(x));

  MeetSemilattice s;
  s.meet_.assign(n * n, 0);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x; y < n; ++y) {
      ElementId m = greatest_lower_bound(poset, x, y, down_counts);
      if (m == n) {
        throw Error(ErrorKind::NotASemilattice,
                    "elements " + std::to_string(x) + " and " + std::to_string(y) +
                        " have no unique greatest lower bound");
      }
      s.meet_[x * n + y] = static_cast<std::uint16_t>(m);
      s.meet_[y * n + x] = static_cast<std::uint16_t>(m);
    }
  }
  s.bottom_ = minimal.front();
  s.covers_ = cover_relation(poset);
  s.poset_ = std::move(poset);
  return s;
}

ChainComplexStats chain_f_vector(const Poset& p) {
  const std::size_t n = p.size();
  // Linear extension: strictly smaller elements have strictly smaller down-sets.
  std::vector<std::size_t> down_counts(n);
  for (ElementId x = 0; x < n; ++x) down_counts[x] = popcount_row(p.down_set(x));
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return down_counts[a] < down_counts[b]; });

  ChainComplexStats stats;
  stats.f_vector.push_back(1);
  if (n == 0) return stats;
  // ending[y] = number of k-element chains whose top is y, for the current k.
  std::vector<Integer> ending(n, 1);
  while (true) {
    Integer total = 0;
    for (auto& e : ending) total += e;
    if (total == 0) break;
    stats.f_vector.push_back(total);
    std::vector<Integer> next(n, 0);
    for (ElementId y : order) {
      for (ElementId x = 0; x < n; ++x) {
        if (x != y && p.leq(x, y)) next[y] += ending[x];
      }
    }
    ending = std::move(next);
  }
  return stats;
}

}  // namespace chow
