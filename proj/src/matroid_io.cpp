#include "chow/matroid_io.hpp"

#include <algorithm>
#include <set>

#include "chow/error.hpp"
#include "json.hpp"

namespace chow {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "position " + std::to_string(e.byte) + ": invalid JSON");
  }
}

void only_fields(const json& j, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw Error(ErrorKind::InputFormat, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorKind::InputFormat, "unknown field \"" + key + "\"");
    }
  }
  for (auto key : allowed) {
    if (!j.contains(std::string(key))) {
      throw Error(ErrorKind::InputFormat, "missing field \"" + std::string(key) + "\"");
    }
  }
}

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw Error(ErrorKind::InputFormat, std::string(what) + " must be an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000 || v > 1'000'000) {
    throw Error(ErrorKind::InputFormat, std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::InputFormat, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(get_int(x, what));
  return out;
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::InputFormat, std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& x : j) {
    auto v = int_list(x, what);
    if (v.size() != 2) throw Error(ErrorKind::InputFormat, std::string(what) + " entries are pairs");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

}  // namespace

MatroidLattice builtin_matroid(std::string_view name, std::span<const int> params) {
  if (name == "boolean") {
    if (params.size() != 1) throw Error(ErrorKind::InvalidParams, "boolean takes one parameter");
    return boolean_matroid(params[0]);
  }
  if (name == "uniform") {
    if (params.size() != 2) throw Error(ErrorKind::InvalidParams, "uniform takes r and n");
    return uniform_matroid(params[0], params[1]);
  }
  throw Error(ErrorKind::InvalidParams, "unknown builtin \"" + std::string(name) + "\"");
}

MatroidLattice complete_graph_matroid(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "K_n needs n >= 2");
  if (n > 5) throw Error(ErrorKind::SizeLimit, "K_n has more than 10 edges for n > 5");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) edges.emplace_back(u, w);
  }
  return graphic_matroid(n, edges);
}

MatroidLattice parse_matroid_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string()) {
    throw Error(ErrorKind::InputFormat, "missing string field \"format\"");
  }
  const auto format = j["format"].get<std::string>();
  if (format == "flats") {
    only_fields(j, {"format", "ground_set", "flats"});
    if (!j["flats"].is_array()) throw Error(ErrorKind::InputFormat, "flats must be an array");
    std::vector<std::vector<int>> flats;
    for (const auto& f : j["flats"]) flats.push_back(int_list(f, "flat"));
    return matroid_from_flats(get_int(j["ground_set"], "ground_set"), std::move(flats));
  }
  if (format == "graph") {
    only_fields(j, {"format", "vertices", "edges"});
    const auto edges = pair_list(j["edges"], "edges");
    return graphic_matroid(get_int(j["vertices"], "vertices"), edges);
  }
  if (format == "builtin") {
    only_fields(j, {"format", "name", "params"});
    if (!j["name"].is_string()) throw Error(ErrorKind::InputFormat, "name must be a string");
    const auto params = int_list(j["params"], "params");
    return builtin_matroid(j["name"].get<std::string>(), params);
  }
  throw Error(ErrorKind::InputFormat, "unknown format \"" + format + "\"");
}

std::string matroid_to_flats_json(const MatroidLattice& m) {
  nlohmann::ordered_json j;
  j["format"] = "flats";
  j["ground_set"] = m.ground_labels(m.top()).size();
  j["flats"] = nlohmann::ordered_json::array();
  for (FlatId f = 0; f < m.size(); ++f) j["flats"].push_back(m.ground_labels(f));
  return j.dump();
}

Poset parse_poset_json(std::string_view text) {
  const json j = parse_json(text);
  only_fields(j, {"size", "covers"});
  const int size = get_int(j["size"], "size");
  if (size < 1) throw Error(ErrorKind::InputFormat, "size must be positive");
  if (static_cast<std::size_t>(size) > kMaxPosetSize) {
    throw Error(ErrorKind::SizeLimit, "poset has more than " + std::to_string(kMaxPosetSize) + " elements");
  }
  std::vector<std::pair<ElementId, ElementId>> rel;
  for (auto [a, b] : pair_list(j["covers"], "covers")) {
    if (a < 0 || b < 0 || a >= size || b >= size) {
      throw Error(ErrorKind::InputFormat, "cover pair outside 0.." + std::to_string(size - 1));
    }
    rel.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
  }
  return Poset::from_relations(static_cast<std::size_t>(size), rel);
}

std::string poset_to_json(const Poset& p) {
  nlohmann::ordered_json j;
  j["size"] = p.size();
  j["covers"] = nlohmann::ordered_json::array();
  const auto covers = cover_relation(p);
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : covers[x]) j["covers"].push_back({x, y});
  }
  return j.dump();
}

namespace {

int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto r0 = static_cast<std::size_t>(rank);
    std::size_t piv = r0;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r0]);
    int inv = 1;
    for (int k = 1; k < p; ++k) {
      if (rows[r0][c] * k % p == 1) inv = k;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r0 || rows[i][c] == 0) continue;
      const int f = rows[i][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = ((rows[i][k] - f * rows[r0][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<int>> random_linear_flats(std::mt19937_64& rng, int rank, int n, int p) {
  if (rank < 1 || n < 1 || n > 16 || p < 2) {
    throw Error(ErrorKind::InvalidParams, "random matrix needs rank >= 1, 1 <= n <= 16, p >= 2");
  }
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(n));
  for (auto& col : cols) {
    do {
      col.assign(static_cast<std::size_t>(rank), 0);
      for (auto& x : col) x = static_cast<int>(rng() % static_cast<std::uint64_t>(p));
    } while (std::all_of(col.begin(), col.end(), [](int x) { return x == 0; }));
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<int> rk(count, 0);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(rank));
    for (int e = 0; e < n; ++e) {
      if (!((mask >> e) & 1U)) continue;
      for (int i = 0; i < rank; ++i) rows[static_cast<std::size_t>(i)].push_back(cols[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]);
    }
    rk[mask] = rank_mod_p(std::move(rows), p);
  }
  std::vector<std::vector<int>> flats;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    bool closed = true;
    for (int e = 0; e < n && closed; ++e) {
      if (!((mask >> e) & 1U) && rk[mask | (1U << e)] == rk[mask]) closed = false;
    }
    if (!closed) continue;
    std::vector<int> f;
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1U) f.push_back(e);
    }
    flats.push_back(std::move(f));
  }
  return flats;
}

}  // namespace chow
