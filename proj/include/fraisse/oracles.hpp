#pragma once

// Independent reference implementations used to cross-check the main engine.
// Everything here is deliberately naive: exhaustive loops, no pruning shared
// with the production code paths.

#include <cstdint>
#include <vector>

#include "fraisse/structure.hpp"

namespace fraisse::oracles {

// All epimorphisms a -> b found by filtering every map b^a, in lexicographic
// order of the map vector.
std::vector<std::vector<int>> epimorphisms_by_filter(const FinStructure& a,
                                                     const FinStructure& b);

// Number of monotone surjections {0..m-1} -> {0..n-1}, counted directly.
std::uint64_t monotone_surjection_count(int m, int n);

struct SimpleGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates

  void add_edge(int u, int v);
};

// Undirected path with n vertices (n - 1 edges).
SimpleGraph path_graph(int n);
// Cycle with n vertices.
SimpleGraph cycle_graph(int n);
// side x side grid with king-move adjacency.
SimpleGraph king_grid(int side);
// Replaces every listed edge (parallels allowed) with a path of k edges.
SimpleGraph subdivision(int vertices, const std::vector<std::pair<int, int>>& edges,
                        int k);
// Recursively checks for a degree- and adjacency-preserving bijection.
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Deterministic pseudo-random structure over {R(2), u(1)}: every structure
// the generator emits passes validation.  Same seed, same stream.
FinStructure random_structure(std::uint32_t seed, int size, int edge_percent);

}  // namespace fraisse::oracles
