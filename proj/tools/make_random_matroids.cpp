// Writes seeded random GF(p)-representable matroids (at most 64 flats) as
// flats JSON files: make_random_matroids OUTDIR [COUNT] [SEED]
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "chow/matroid_io.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_random_matroids OUTDIR [COUNT] [SEED]\n";
    return 1;
  }
  const std::string dir = argv[1];
  const int count = argc > 2 ? std::stoi(argv[2]) : 20;
  std::mt19937_64 rng(argc > 3 ? std::stoull(argv[3]) : 20240601);
  std::set<std::string> seen;
  const int primes[] = {2, 3, 5};
  int written = 0;
  while (written < count) {
    const int rank = 2 + static_cast<int>(rng() % 3);
    const int n = rank + 1 + static_cast<int>(rng() % 4);
    const int p = primes[rng() % 3];
    auto flats = chow::random_linear_flats(rng, rank, n, p);
    if (flats.size() > 64) continue;
    auto m = chow::matroid_from_flats(n, flats);
    if (m.rank() < 2) continue;
    const std::string json = chow::matroid_to_flats_json(m);
    if (!seen.insert(json).second) continue;
    char name[64];
    std::snprintf(name, sizeof name, "/random_%02d.json", written);
    std::ofstream(dir + name) << json << "\n";
    std::cout << name + 1 << ": rank " << m.rank() << ", " << m.size() << " flats over GF(" << p
              << ")\n";
    ++written;
  }
  return 0;
}
