#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "klein/graph.hpp"

// Seed for randomized property tests; KLEINHOMOLOGY_SEED overrides it.
std::uint64_t test_seed();

inline std::mt19937_64 test_rng(std::uint64_t salt) { return std::mt19937_64(test_seed() ^ (salt * 0x9e3779b97f4a7c15ull)); }

// A random relabelling of the half-edges of g.
inline klein::HalfEdgeGraph shuffled(const klein::HalfEdgeGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.half_edge_count());
  for (int i = 0; i < g.half_edge_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return klein::relabel(g, perm);
}
