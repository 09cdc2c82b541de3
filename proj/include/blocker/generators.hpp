#pragma once

#include <cstdint>

#include "blocker/graph.hpp"

namespace blocker {

// Deterministic graph generators. The same seed yields the same graph on
// every platform (no standard-library distributions involved).

Graph gen_cycle(int n);
Graph gen_path(int n);
/// Star with center 0 and n-1 leaves.
Graph gen_star(int n);

/// Random tree: vertex i attaches to a uniform earlier vertex.
Graph gen_tree(int n, uint64_t seed);

/// Connected bipartite graph: a random tree plus extra edges between
/// opposite BFS-parity classes, each kept with probability p.
Graph gen_connected_bipartite(int n, double p, uint64_t seed);

/// Intersection graph of random subtrees of a random host tree.
Graph gen_chordal(int n, uint64_t seed);

/// Edge-samples pairs with probability p, rejecting any edge that would
/// close a triangle.
Graph gen_triangle_free(int n, double p, uint64_t seed);

namespace rng {

/// splitmix64; used both as a generator step and to derive per-instance seeds.
uint64_t mix(uint64_t& state);

struct Stream {
  uint64_t state;
  explicit Stream(uint64_t seed) : state(seed) {}
  uint64_t next() { return mix(state); }
  /// Uniform-ish value in [0, bound); bound > 0.
  uint64_t below(uint64_t bound) { return next() % bound; }
  /// True with probability p.
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }
};

}  // namespace rng

}  // namespace blocker
