#pragma once

// Brute-force reference implementations. Nothing here uses the library's
// order or adjunction code; they are deliberately naive.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Relation as a dense table; leq[i][j] means i <= j.
struct RawOrder {
  int n = 0;
  std::vector<std::vector<bool>> leq;

  bool le(int a, int b) const { return leq[a][b]; }
  bool eq(int a, int b) const { return leq[a][b] && leq[b][a]; }
};

using RawMap = std::vector<int>;

bool is_reflexive(const RawOrder& p);
bool is_transitive(const RawOrder& p);
bool is_antisymmetric(const RawOrder& p);

// Smallest relation containing the given pairs, by repeated composition until
// nothing changes.
RawOrder closure_by_iteration(int n, const std::vector<std::pair<int, int>>& pairs);

// All posets on n points up to isomorphism (n <= 5).
std::vector<RawOrder> posets_up_to_iso(int n);
// Every poset with at most max_n points, up to isomorphism.
std::vector<RawOrder> all_small_posets(int max_n);

RawOrder chain(int n);
RawOrder antichain(int n);

bool is_monotone(const RawOrder& p, const RawOrder& q, const RawMap& f);
std::vector<RawMap> monotone_maps(const RawOrder& p, const RawOrder& q);

// Definition, checked over every pair.
bool is_galois(const RawOrder& c, const RawOrder& d, const RawMap& f, const RawMap& g);

// Every monotone g: D -> C with f -| g (or g -| f for the left side).
std::vector<RawMap> right_adjoints(const RawOrder& c, const RawOrder& d, const RawMap& f);
std::vector<RawMap> left_adjoints(const RawOrder& c, const RawOrder& d, const RawMap& g);

// Hasse edges by deleting every pair that is implied through a third point.
std::vector<std::pair<int, int>> covering_pairs(const RawOrder& p);

// Random poset on n points: random DAG over a shuffled order, closed.
RawOrder random_poset(std::mt19937& rng, int n);
RawOrder random_preorder(std::mt19937& rng, int n);
RawMap random_monotone(std::mt19937& rng, const RawOrder& p, const RawOrder& q);

bool maps_equal_up_to_equivalence(const RawOrder& target, const RawMap& a, const RawMap& b);

std::string label(int i);

}  // namespace oracle
