#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace loadcol {

/// Erdos-Renyi G(n,p); deterministic for fixed (n, p, seed).
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// q disjoint edges on 2q vertices.
Graph gen_matching(int q);

/// Disjoint stars; leaf_counts[i] >= 1 is the number of leaves of star i.
Graph gen_star_forest(const std::vector<int>& leaf_counts);

Graph gen_clique(int n);

/// g plus `count` disjoint copies of K_{1,size}. The padded graph is in
/// (c,k)-LCP iff g is in (c-count,k)-LCP, which makes this useful for
/// building multi-color test instances out of two-color ones.
Graph pad_with_stars(const Graph& g, int count, int size);

}  // namespace loadcol
