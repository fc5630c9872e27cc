#pragma once

#include <string>

#include "exact.hpp"
#include "graph.hpp"
#include "reduction.hpp"

namespace loadcol {

enum class Verdict { Yes, No, Kernel, Budget };

/// Result of kernelize/decide. Yes always carries a coloring that verifies
/// on the ORIGINAL graph; Kernel carries the reduced instance plus the trace
/// that replays its derivation.
struct Outcome {
  Verdict verdict = Verdict::No;
  Coloring coloring;       // Yes
  std::string provenance;  // which construction produced the answer
  Instance kernel;         // Kernel
  ReductionTrace trace;    // reductions applied (possibly empty)
};

/// Polynomial-time kernelization. k=0 is always Yes; k=1 is decided by a
/// matching test. Otherwise reduces exhaustively and tries the star-cover
/// and edge-density constructions; emits a Kernel only when the reduced
/// instance has n < 2c'k and (for c'=2) m < 8k.
Outcome kernelize(const Instance& inst);

/// kernelize, then exact search on the kernel with the certificate lifted
/// back through the trace. BudgetExceeded propagates from the exact step.
Outcome decide(const Instance& inst, long long budget = kDefaultExactBudget);

struct ApproxResult {
  bool budget_exceeded = false;
  long long k = 0;
  Coloring coloring;  // verifies at (c, k) on the input graph
  bool exact = false; // k is known to equal k_opt
};

/// Constant-ratio approximation of the largest feasible k for c colors
/// (ratio 2^{c-1} prod_{i<=c} K(i)/i). Recurses through reductions; the
/// exact base case consumes the budget.
ApproxResult approx_general(const Graph& g, int c, long long budget = kDefaultExactBudget);

/// (4+epsilon)-approximation for two colors. Instances with fewer than
/// 8*ceil(3/epsilon) edges are solved exactly within the budget.
ApproxResult approx_two(const Graph& g, double epsilon, long long budget = kDefaultExactBudget);

}  // namespace loadcol
