#pragma once

#include "graph.hpp"

namespace loadcol {

inline constexpr long long kDefaultExactBudget = 10'000'000;

enum class ExactStatus { Yes, No, BudgetExceeded };

struct ExactResult {
  ExactStatus status = ExactStatus::No;
  Coloring coloring;       // populated on Yes
  long long nodes_used = 0;
};

/// Exhaustive decision. Enumerates colorings per connected component with
/// per-color edge counts capped at k, then combines components by
/// vector-sum dynamic programming; the lowest-id vertex of the first
/// component is pinned to color 1 (colors are interchangeable).
///
/// `budget` bounds the number of partial-coloring tree nodes; when it runs
/// out the result is BudgetExceeded, never a false No.
ExactResult decide_exact(const Instance& inst, long long budget = kDefaultExactBudget);

struct MaxKResult {
  bool budget_exceeded = false;
  int k_opt = 0;
  Coloring coloring;  // valid at k_opt
};

/// Largest k with g in (colors,k)-LCP, by binary search over decide_exact.
/// The budget is shared across all probes.
MaxKResult max_k_exact(const Graph& g, int colors, long long budget = kDefaultExactBudget);

}  // namespace loadcol
