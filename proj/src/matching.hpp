#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace loadcol {

/// Maximum bipartite matching (Hopcroft-Karp). `adj[l]` lists right-side
/// indices adjacent to left index l. Returns the matching as match_left,
/// with -1 for unmatched left vertices.
struct BipartiteMatching {
  int size = 0;
  std::vector<int> match_left;
};
BipartiteMatching hopcroft_karp(int left_count, int right_count,
                                const std::vector<std::vector<int>>& adj);

/// Greedy maximal matching, edges scanned in lexicographic order.
std::vector<std::pair<int, int>> greedy_maximal_matching(const Graph& g);

/// A matching with at least `target` edges, or nullopt if none exists.
/// Exact for any graph: a greedy maximal matching either already reaches the
/// target or its endpoints form a small vertex cover, and the search over
/// cover subsets plus Hopcroft-Karp on cover-to-outside edges is exhaustive.
/// Intended for small targets (the k=1 pipeline case, target <= c).
std::optional<std::vector<std::pair<int, int>>> find_matching_of_size(const Graph& g, int target);

}  // namespace loadcol
