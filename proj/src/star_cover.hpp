#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "reduction.hpp"

namespace loadcol {

/// Spanning star forest: every vertex appears in exactly one star, as its
/// center or one of its leaves, and every star edge is a graph edge. In a
/// two-vertex star the lower id is the center.
struct StarCover {
  std::map<int, std::vector<int>> stars;  // center -> sorted leaves (nonempty)

  int max_star_size() const;                       // largest leaf count
  std::map<int, int> degree_profile() const;       // leaf count -> number of stars
};

bool check_cover(const Graph& g, const StarCover& s, std::string* why = nullptr);

/// Spanning forest of g with every edge not incident to a forest leaf
/// deleted; the remaining components are stars. g must have no isolated
/// vertices (reduce first).
StarCover initial_cover(const Graph& g);

/// Thrown by refine_cover when it finds an obstacle with |V1| < c: the
/// caller's graph was not actually reduced and reduce() must rerun.
struct NotReducedError : std::logic_error {
  Obstacle obstacle;
  NotReducedError(Obstacle ob, const std::string& what_)
      : std::logic_error(what_), obstacle(std::move(ob)) {}
};

struct RefineResult {
  enum class Kind { Cover, Witness };
  Kind kind = Kind::Cover;
  StarCover cover;     // Kind::Cover: max star size <= max(3,k)
  Obstacle witness;    // Kind::Witness: |V1| >= c, every assigned set >= k
  long long moves = 0; // improvement moves applied (bounded by n * maxdeg)
};

/// Applies leaf-rewiring and alternating-path improvement moves until the
/// largest star has at most max(3,k) leaves, or extracts an obstacle whose
/// stars all have at least k leaves (a Yes-witness when |V1| >= c).
/// Precondition: s is a valid cover of g and g is reduced for (c,k)-LCP.
RefineResult refine_cover(const Graph& g, StarCover s, int k, int c);

}  // namespace loadcol
