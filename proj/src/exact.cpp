#include "exact.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace loadcol {

namespace {

std::vector<int> capped(std::vector<int> counts, int k) {
  for (int& x : counts) x = std::min(x, k);
  return counts;
}

// All capped per-color edge-count vectors achievable on one component, with
// one representative coloring each. Returns false when the budget ran out.
// Sets *found_full and stops early if some coloring reaches k in every color
// on this component alone.
bool enumerate_component(const Graph& g, const std::vector<int>& comp, int c, int k,
                         bool pin_first, long long& budget,
                         std::map<std::vector<int>, Coloring>& out, bool* found_full) {
  // BFS order keeps already-colored neighbors nearby.
  std::vector<int> order;
  std::unordered_set<int> seen;
  std::queue<int> q;
  q.push(comp.front());
  seen.insert(comp.front());
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    order.push_back(u);
    for (int v : g.neighbors(u))
      if (seen.insert(v).second) q.push(v);
  }

  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> earlier(order.size());  // earlier-neighbor positions
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int v : g.neighbors(order[i]))
      if (pos[v] < static_cast<int>(i)) earlier[i].push_back(pos[v]);

  std::vector<int> color(order.size(), 0);
  std::vector<int> counts(c, 0);
  const std::vector<int> full(c, k);

  // Iterative DFS over color assignments.
  std::size_t depth = 0;
  color[0] = 0;
  while (true) {
    if (depth == order.size()) {
      auto key = capped(counts, k);
      if (!out.count(key)) {
        Coloring col;
        for (std::size_t i = 0; i < order.size(); ++i) col[order[i]] = color[i];
        out.emplace(key, std::move(col));
        if (key == full) {
          *found_full = true;
          return true;
        }
      }
      --depth;  // backtrack into last vertex
    }
    // Undo the current color of `depth` (if any) and advance it.
    int limit = (pin_first && depth == 0) ? 1 : c;
    int cur = color[depth];
    if (cur != 0) {
      for (int p : earlier[depth])
        if (color[p] == cur) --counts[cur - 1];
    }
    if (cur == limit) {
      color[depth] = 0;
      if (depth == 0) return true;  // exhausted
      --depth;
      continue;
    }
    ++cur;
    color[depth] = cur;
    for (int p : earlier[depth])
      if (color[p] == cur) ++counts[cur - 1];
    if (--budget <= 0) return false;
    ++depth;
    if (depth < order.size()) color[depth] = 0;
  }
}

}  // namespace

ExactResult decide_exact(const Instance& inst, long long budget) {
  ExactResult res;
  long long remaining = budget;
  const int c = inst.colors;
  const int k = inst.k;

  auto all_one = [&]() {
    Coloring col;
    for (int id : inst.graph.vertices()) col[id] = 1;
    return col;
  };
  if (k == 0) {
    res.status = ExactStatus::Yes;
    res.coloring = all_one();
    return res;
  }

  std::map<std::vector<int>, Coloring> acc;
  acc.emplace(std::vector<int>(c, 0), Coloring{});
  const std::vector<int> full(c, k);
  std::vector<Component> comps = inst.graph.components();
  bool first_nontrivial = true;

  for (const auto& comp : comps) {
    if (comp.edges == 0) continue;  // isolated vertices never change the verdict
    std::map<std::vector<int>, Coloring> states;
    bool found_full = false;
    if (!enumerate_component(inst.graph, comp.vertices, c, k, first_nontrivial, remaining,
                             states, &found_full)) {
      res.status = ExactStatus::BudgetExceeded;
      res.nodes_used = budget - remaining;
      return res;
    }
    first_nontrivial = false;
    if (found_full) {
      res.status = ExactStatus::Yes;
      res.coloring = all_one();
      for (auto& [id, color] : states.at(full)) res.coloring[id] = color;
      res.nodes_used = budget - remaining;
      return res;
    }
    std::map<std::vector<int>, Coloring> next;
    for (const auto& [va, ca] : acc)
      for (const auto& [vb, cb] : states) {
        std::vector<int> key(c);
        for (int i = 0; i < c; ++i) key[i] = std::min(k, va[i] + vb[i]);
        auto it = next.find(key);
        if (it == next.end()) {
          Coloring merged = ca;
          merged.insert(cb.begin(), cb.end());
          next.emplace(std::move(key), std::move(merged));
        }
      }
    acc = std::move(next);
  }

  res.nodes_used = budget - remaining;
  auto hit = acc.find(full);
  if (hit != acc.end()) {
    res.status = ExactStatus::Yes;
    res.coloring = all_one();
    for (auto& [id, color] : hit->second) res.coloring[id] = color;
  } else {
    res.status = ExactStatus::No;
  }
  return res;
}

MaxKResult max_k_exact(const Graph& g, int colors, long long budget) {
  MaxKResult out;
  long long remaining = budget;
  Coloring best;
  for (int id : g.vertices()) best[id] = 1;

  int lo = 0, hi = static_cast<int>(g.num_edges()) / std::max(colors, 1);
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    ExactResult r = decide_exact({g, colors, mid}, remaining);
    remaining -= r.nodes_used;
    if (r.status == ExactStatus::BudgetExceeded || remaining <= 0) {
      out.budget_exceeded = true;
      return out;
    }
    if (r.status == ExactStatus::Yes) {
      lo = mid;
      best = std::move(r.coloring);
    } else {
      hi = mid - 1;
    }
  }
  out.k_opt = lo;
  out.coloring = std::move(best);
  return out;
}

}  // namespace loadcol
