#pragma once

#include <vector>

#include "graph.hpp"

namespace loadcol {

/// Certificate for a K_{1,<2k}-graph with n >= 2ck: gives each color an
/// induced set of stars with >= k edges on <= 2k vertices (the last color
/// absorbs leftovers). Preconditions checked; k >= 1.
Coloring color_star_graph(const Graph& g, int c, int k);

/// Certificate with 2^i colors for a bipartite graph with parts (side_a,
/// side_b) and m >= b_bound(2^i, k, n). Splits the graph recursively by
/// migrating vertices between part halves until both halves meet the
/// next-level budget.
Coloring color_dense_bipartite(const Graph& g, const std::vector<int>& side_a,
                               const std::vector<int>& side_b, int i, int k);

/// Certificate with 2^i colors for any graph with m >= f_bound(2^i, k, n).
/// Grows a vertex set A greedily until its internal edges hit the half-level
/// budget, then recurses on A and either V-A or the crossing bipartite graph.
Coloring color_dense(const Graph& g, int i, int k);

/// Certificate with c colors for m >= f_bound(next_pow2(c), k, n): runs
/// color_dense at the next power of two and merges surplus classes into
/// class 1.
Coloring color_dense_c(const Graph& g, int c, int k);

}  // namespace loadcol
