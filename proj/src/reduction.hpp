#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace loadcol {

/// Witness enabling one reduction step: a set of centers V1, a set V2 whose
/// neighborhoods lie entirely inside V1, and for each center a private set
/// of at least k assigned V2-neighbors. Deleting V1 and V2 safely spends
/// |V1| colors.
struct Obstacle {
  std::vector<int> centers;                    // V1, sorted
  std::vector<int> dominated;                  // V2, sorted
  std::map<int, std::vector<int>> assignment;  // u in V1 -> V_u

  int size() const { return static_cast<int>(centers.size()); }  // the i in O_{i,k}
};

/// Checks all Obstacle invariants against a host graph: disjointness,
/// closed neighborhoods, |V_u| >= k, private assignments. For |V1| >= 1
/// every V2 vertex must be non-isolated (isolated vertices belong to the
/// i = 0 rule only).
bool check_obstacle(const Graph& g, const Obstacle& ob, int k, std::string* why = nullptr);

/// Lexicographically first obstacle with |V1| = i, or nullopt if none
/// exists. For i = 0 returns (empty, {v}) for the lowest-id isolated
/// vertex. Requires k >= 1 when i >= 1.
std::optional<Obstacle> find_obstacle(const Graph& g, int i, int k);

/// Deletes V1 and V2 and decreases c by |V1|. The obstacle must be valid
/// for the instance (checked) and |V1| < c.
Instance apply_rule(const Instance& inst, const Obstacle& ob);

/// Replayable record of a reduction run.
struct ReductionTrace {
  int initial_colors = 0;
  int final_colors = 0;
  int k = 0;
  std::vector<Obstacle> steps;  // in application order
};

/// Applies the trace's deletions to `g`; reproduces the reduced graph.
Graph replay_trace(const Graph& g, const ReductionTrace& trace);

/// Exhaustively applies rules with i = 0, 1, ..., c-1 ascending, restarting
/// from i = 0 after each application, until no rule applies. With k = 0 only
/// the isolated-vertex rule runs. `max_rule_size` caps i (the subset
/// enumeration is O(n^i)).
std::pair<Instance, ReductionTrace> reduce(const Instance& inst, int max_rule_size = 5);

/// Extends a coloring of the reduced graph, valid at (final_colors,
/// target_k), to the original graph: each obstacle's centers and their
/// assigned sets take fresh colors, leftover V2 vertices take color 1.
/// target_k defaults to trace.k and must not exceed it.
Coloring lift_coloring(const ReductionTrace& trace, const Instance& reduced, const Coloring& col,
                       int target_k = -1);

}  // namespace loadcol
