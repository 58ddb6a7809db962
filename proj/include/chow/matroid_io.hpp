#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chow/matroid.hpp"
#include "chow/poset.hpp"

namespace chow {

/// One of
///   {"format":"flats","ground_set":n,"flats":[[...],...]}
///   {"format":"graph","vertices":v,"edges":[[u,w],...]}
///   {"format":"builtin","name":"boolean"|"uniform","params":[...]}
/// Unknown fields are rejected (InputFormat); malformed JSON is a ParseError.
MatroidLattice parse_matroid_json(std::string_view text);

/// Flats format, using the ground labels of each flat.
std::string matroid_to_flats_json(const MatroidLattice& m);

/// {"size":n,"covers":[[i,j],...]} with i covered by j.
Poset parse_poset_json(std::string_view text);
std::string poset_to_json(const Poset& p);

/// "boolean" {n}, "uniform" {r, n}.
MatroidLattice builtin_matroid(std::string_view name, std::span<const int> params);

/// Complete graph on n vertices.
MatroidLattice complete_graph_matroid(int n);

/// Flats of the column matroid of a random rank x n matrix over GF(p)
/// without zero columns.
std::vector<std::vector<int>> random_linear_flats(std::mt19937_64& rng, int rank, int n, int p);

}  // namespace chow
