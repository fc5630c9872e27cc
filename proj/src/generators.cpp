#include "generators.hpp"

#include <random>
#include <stdexcept>

namespace loadcol {

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp: n < 0");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph gen_matching(int q) {
  if (q < 0) throw std::invalid_argument("matching: q < 0");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < q; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * q, edges);
}

Graph gen_star_forest(const std::vector<int>& leaf_counts) {
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  for (int leaves : leaf_counts) {
    if (leaves < 1) throw std::invalid_argument("star_forest: star needs >= 1 leaf");
    int center = next++;
    for (int j = 0; j < leaves; ++j) edges.emplace_back(center, next++);
  }
  return Graph(next, edges);
}

Graph gen_clique(int n) {
  if (n < 0) throw std::invalid_argument("clique: n < 0");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph pad_with_stars(const Graph& g, int count, int size) {
  if (count < 0) throw std::invalid_argument("pad_with_stars: count < 0");
  if (count > 0 && size < 1) throw std::invalid_argument("pad_with_stars: star size < 1");
  return g.disjoint_union(gen_star_forest(std::vector<int>(count, size)));
}

}  // namespace loadcol
