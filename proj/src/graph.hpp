#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace loadcol {

/// Connected component: its vertices (sorted) and the number of edges inside.
struct Component {
  std::vector<int> vertices;
  std::size_t edges = 0;
};

/// Simple undirected graph over stable nonnegative integer vertex ids.
///
/// Vertex deletion produces a new Graph in which the surviving ids are
/// unchanged, so reduction traces and certificates can keep referring to
/// vertices across pipeline stages. Ids are never recycled.
class Graph {
 public:
  Graph() = default;

  /// Vertices 0..n-1 with the given edge list.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  /// Explicit (possibly sparse) vertex id set.
  Graph(std::vector<int> ids, const std::vector<std::pair<int, int>>& edge_list);

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  std::size_t num_edges() const { return m_; }

  /// Sorted vertex ids.
  const std::vector<int>& vertices() const { return ids_; }
  bool has_vertex(int id) const { return index_.count(id) != 0; }
  bool has_edge(int u, int v) const;

  /// Sorted neighbor ids. Throws std::out_of_range for unknown ids.
  const std::vector<int>& neighbors(int id) const;
  int degree(int id) const { return static_cast<int>(neighbors(id).size()); }
  int max_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Copy with the given vertices (and their incident edges) removed.
  Graph without(const std::vector<int>& removed) const;

  /// Induced subgraph on the given vertex set.
  Graph induced(const std::vector<int>& keep) const;

  /// Number of edges with both endpoints in `set`.
  std::size_t edges_within(const std::vector<int>& set) const;

  /// Connected components, ordered by smallest contained vertex id.
  std::vector<Component> components() const;

  /// Disjoint union; the other graph's ids are shifted above ours.
  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph& other) const;

 private:
  void build(std::vector<int> ids, const std::vector<std::pair<int, int>>& edge_list);

  std::vector<int> ids_;                     // sorted
  std::unordered_map<int, int> index_;       // id -> position in ids_
  std::vector<std::vector<int>> adj_;        // by position, sorted neighbor ids
  std::size_t m_ = 0;
};

/// The unit of decision: does graph admit a `colors`-coloring with at least
/// k monochromatic edges per color?
struct Instance {
  Graph graph;
  int colors = 1;
  int k = 0;
};

/// Total assignment vertex id -> color in [c]. Ordered so serialization and
/// iteration are deterministic.
using Coloring = std::map<int, int>;

/// Result of checking a coloring certificate.
struct CertificateCheck {
  /// False when the coloring is malformed (uncolored vertex, color out of
  /// range); this is distinct from a well-formed but invalid certificate.
  bool well_formed = true;
  std::string issue;
  bool valid = false;
  std::vector<long long> per_color;  // monochromatic edges per color, size c
};

CertificateCheck verify_coloring(const Instance& inst, const Coloring& col);

}  // namespace loadcol
