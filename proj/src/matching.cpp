#include "matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace loadcol {

BipartiteMatching hopcroft_karp(int left_count, int right_count,
                                const std::vector<std::vector<int>>& adj) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_l(left_count, -1), match_r(right_count, -1), dist(left_count);

  auto bfs = [&]() {
    std::queue<int> q;
    int free_dist = kInf;
    for (int l = 0; l < left_count; ++l) {
      if (match_l[l] == -1) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      if (dist[l] >= free_dist) continue;
      for (int r : adj[l]) {
        int nl = match_r[r];
        if (nl == -1) {
          free_dist = std::min(free_dist, dist[l] + 1);
        } else if (dist[nl] == kInf) {
          dist[nl] = dist[l] + 1;
          q.push(nl);
        }
      }
    }
    return free_dist != kInf;
  };

  std::function<bool(int)> dfs = [&](int l) {
    for (int r : adj[l]) {
      int nl = match_r[r];
      if (nl == -1 || (dist[nl] == dist[l] + 1 && dfs(nl))) {
        match_l[l] = r;
        match_r[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  BipartiteMatching out;
  while (bfs())
    for (int l = 0; l < left_count; ++l)
      if (match_l[l] == -1 && dfs(l)) ++out.size;
  out.match_left = std::move(match_l);
  return out;
}

std::vector<std::pair<int, int>> greedy_maximal_matching(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  std::unordered_set<int> used;
  for (auto [u, v] : g.edges())
    if (!used.count(u) && !used.count(v)) {
      out.emplace_back(u, v);
      used.insert(u);
      used.insert(v);
    }
  return out;
}

namespace {

// Maximum matching on a handful of vertices by plain branching.
std::vector<std::pair<int, int>> tiny_max_matching(const Graph& g, const std::vector<int>& verts) {
  std::vector<std::pair<int, int>> best;
  std::vector<std::pair<int, int>> cur;
  std::unordered_set<int> used;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (cur.size() > best.size()) best = cur;
    if (idx >= verts.size()) return;
    int u = verts[idx];
    rec(idx + 1);  // leave u unmatched
    if (used.count(u)) return;
    for (std::size_t j = idx + 1; j < verts.size(); ++j) {
      int v = verts[j];
      if (used.count(v) || !g.has_edge(u, v)) continue;
      used.insert(u);
      used.insert(v);
      cur.emplace_back(u, v);
      rec(idx + 1);
      cur.pop_back();
      used.erase(u);
      used.erase(v);
    }
  };
  rec(0);
  return best;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> find_matching_of_size(const Graph& g, int target) {
  if (target <= 0) return std::vector<std::pair<int, int>>{};
  auto greedy = greedy_maximal_matching(g);
  if (static_cast<int>(greedy.size()) >= target) return greedy;

  // Every edge meets the cover S = V(greedy). A maximum matching splits into
  // S-to-outside pairs (a bipartite matching) and edges inside S.
  std::vector<int> cover;
  for (auto [u, v] : greedy) {
    cover.push_back(u);
    cover.push_back(v);
  }
  std::sort(cover.begin(), cover.end());
  std::unordered_set<int> in_cover(cover.begin(), cover.end());

  std::vector<int> outside;  // outside neighbors of the cover
  std::unordered_map<int, int> outside_index;
  std::vector<std::vector<int>> out_adj(cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (int w : g.neighbors(cover[i]))
      if (!in_cover.count(w)) {
        auto it = outside_index.find(w);
        if (it == outside_index.end()) {
          it = outside_index.emplace(w, static_cast<int>(outside.size())).first;
          outside.push_back(w);
        }
        out_adj[i].push_back(it->second);
      }

  int s = static_cast<int>(cover.size());
  std::vector<std::pair<int, int>> best;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    std::vector<int> picked;  // cover positions matched to outside vertices
    std::vector<int> rest;
    for (int i = 0; i < s; ++i)
      ((mask >> i) & 1u ? picked : rest).push_back(i);
    std::vector<std::vector<int>> adj(picked.size());
    for (std::size_t i = 0; i < picked.size(); ++i) adj[i] = out_adj[picked[i]];
    auto bm = hopcroft_karp(static_cast<int>(picked.size()), static_cast<int>(outside.size()), adj);
    if (bm.size != static_cast<int>(picked.size())) continue;  // subset not saturable

    std::vector<int> rest_ids;
    for (int i : rest) rest_ids.push_back(cover[i]);
    auto inner = tiny_max_matching(g, rest_ids);

    std::vector<std::pair<int, int>> combined;
    for (std::size_t i = 0; i < picked.size(); ++i)
      combined.emplace_back(cover[picked[i]], outside[bm.match_left[i]]);
    combined.insert(combined.end(), inner.begin(), inner.end());
    if (combined.size() > best.size()) best = combined;
    if (static_cast<int>(best.size()) >= target) return best;
  }
  if (static_cast<int>(best.size()) >= target) return best;
  return std::nullopt;
}

}  // namespace loadcol
