#pragma once

#include "graph.hpp"

namespace loadcol {

/// (2,k) certificate when m >= 3k-2 and every component has < k edges:
/// components are assigned whole to the lighter side, largest first.
Coloring color2_small_components(const Graph& g, int k);

/// (2,k) certificate for a reduced graph with exactly one component C of
/// >= k edges, m' = |E(G - V(C))| < k, and max degree >= 3k - 2m'. Builds
/// color 1 from pairs around a max-degree vertex u plus everything outside
/// C, and color 2 from u and its remaining neighbors.
Coloring color2_high_degree(const Graph& g, int k);

/// (2,k) certificate when max degree < 3k and m >= 8k. Grows and prunes a
/// set A with >= k internal edges, then migrates vertices between part
/// halves until both color classes reach k edges.
Coloring color2_low_degree(const Graph& g, int k);

/// (2,k) certificate for any graph reduced for (2,k) with m >= 8k;
/// dispatches to the constructor whose precondition holds.
Coloring color2_dense(const Graph& g, int k);

}  // namespace loadcol
