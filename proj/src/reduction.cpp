#include "reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "matching.hpp"

namespace loadcol {

bool check_obstacle(const Graph& g, const Obstacle& ob, int k, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!std::is_sorted(ob.centers.begin(), ob.centers.end()) ||
      std::adjacent_find(ob.centers.begin(), ob.centers.end()) != ob.centers.end())
    return fail("V1 not sorted-unique");
  if (!std::is_sorted(ob.dominated.begin(), ob.dominated.end()) ||
      std::adjacent_find(ob.dominated.begin(), ob.dominated.end()) != ob.dominated.end())
    return fail("V2 not sorted-unique");
  for (int u : ob.centers)
    if (!g.has_vertex(u)) return fail("V1 vertex missing from graph");
  std::unordered_set<int> in_v1(ob.centers.begin(), ob.centers.end());
  std::unordered_set<int> in_v2;
  for (int v : ob.dominated) {
    if (!g.has_vertex(v)) return fail("V2 vertex missing from graph");
    if (in_v1.count(v)) return fail("V1 and V2 overlap");
    in_v2.insert(v);
    const auto& nb = g.neighbors(v);
    if (!ob.centers.empty() && nb.empty()) return fail("isolated vertex in V2 of an i>=1 obstacle");
    for (int w : nb)
      if (!in_v1.count(w)) return fail("V2 vertex has a neighbor outside V1");
  }
  std::unordered_set<int> claimed;
  for (int u : ob.centers) {
    auto it = ob.assignment.find(u);
    if (it == ob.assignment.end()) return fail("center without assigned set");
    const auto& vu = it->second;
    if (static_cast<int>(vu.size()) < k) return fail("assigned set smaller than k");
    for (int v : vu) {
      if (!in_v2.count(v)) return fail("assigned vertex outside V2");
      if (!g.has_edge(u, v)) return fail("assigned vertex not adjacent to its center");
      if (!claimed.insert(v).second) return fail("assigned sets overlap");
    }
  }
  if (ob.assignment.size() != ob.centers.size()) return fail("assignment for non-center vertex");
  return true;
}

std::optional<Obstacle> find_obstacle(const Graph& g, int i, int k) {
  if (i < 0) throw std::invalid_argument("find_obstacle: i < 0");
  if (i == 0) {
    for (int v : g.vertices())
      if (g.degree(v) == 0) {
        Obstacle ob;
        ob.dominated = {v};
        return ob;
      }
    return std::nullopt;
  }
  if (k < 1) throw std::invalid_argument("find_obstacle: k must be >= 1 when i >= 1");

  // Only non-isolated vertices of degree <= i can ever land in V2.
  std::vector<int> cand;
  for (int v : g.vertices()) {
    int d = g.degree(v);
    if (d >= 1 && d <= i) cand.push_back(v);
  }
  const long long demand = static_cast<long long>(i) * k;
  if (static_cast<long long>(cand.size()) < demand) return std::nullopt;

  const auto& verts = g.vertices();
  const int n = g.num_vertices();
  if (n < i) return std::nullopt;

  std::vector<int> sel(i);
  for (int j = 0; j < i; ++j) sel[j] = j;
  while (true) {
    std::vector<int> v1(i);
    for (int j = 0; j < i; ++j) v1[j] = verts[sel[j]];

    std::vector<int> v2;
    for (int v : cand) {
      if (std::binary_search(v1.begin(), v1.end(), v)) continue;
      const auto& nb = g.neighbors(v);
      if (std::includes(v1.begin(), v1.end(), nb.begin(), nb.end())) v2.push_back(v);
    }
    if (static_cast<long long>(v2.size()) >= demand) {
      std::unordered_map<int, int> v2_index;
      for (int j = 0; j < static_cast<int>(v2.size()); ++j) v2_index[v2[j]] = j;
      // k copies per center: each center must own k private V2-neighbors.
      bool plausible = true;
      std::vector<std::vector<int>> per_center(i);
      for (int j = 0; j < i && plausible; ++j) {
        for (int w : g.neighbors(v1[j])) {
          auto it = v2_index.find(w);
          if (it != v2_index.end()) per_center[j].push_back(it->second);
        }
        if (static_cast<int>(per_center[j].size()) < k) plausible = false;
      }
      if (plausible) {
        std::vector<std::vector<int>> adj(i * k);
        for (int j = 0; j < i; ++j)
          for (int t = 0; t < k; ++t) adj[j * k + t] = per_center[j];
        auto bm = hopcroft_karp(i * k, static_cast<int>(v2.size()), adj);
        if (bm.size == static_cast<int>(demand)) {
          Obstacle ob;
          ob.centers = v1;
          ob.dominated = v2;
          for (int j = 0; j < i; ++j) {
            std::vector<int> vu;
            for (int t = 0; t < k; ++t) vu.push_back(v2[bm.match_left[j * k + t]]);
            std::sort(vu.begin(), vu.end());
            ob.assignment[v1[j]] = std::move(vu);
          }
          return ob;
        }
      }
    }

    // next i-combination in lexicographic order
    int j = i - 1;
    while (j >= 0 && sel[j] == n - i + j) --j;
    if (j < 0) break;
    ++sel[j];
    for (int t = j + 1; t < i; ++t) sel[t] = sel[t - 1] + 1;
  }
  return std::nullopt;
}

Instance apply_rule(const Instance& inst, const Obstacle& ob) {
  std::string why;
  if (!check_obstacle(inst.graph, ob, inst.k, &why))
    throw std::logic_error("apply_rule: invalid obstacle: " + why);
  if (ob.size() >= inst.colors)
    throw std::logic_error("apply_rule: |V1| must be smaller than c");
  std::vector<int> gone = ob.centers;
  gone.insert(gone.end(), ob.dominated.begin(), ob.dominated.end());
  return Instance{inst.graph.without(gone), inst.colors - ob.size(), inst.k};
}

Graph replay_trace(const Graph& g, const ReductionTrace& trace) {
  Graph cur = g;
  for (const auto& ob : trace.steps) {
    std::vector<int> gone = ob.centers;
    gone.insert(gone.end(), ob.dominated.begin(), ob.dominated.end());
    cur = cur.without(gone);
  }
  return cur;
}

std::pair<Instance, ReductionTrace> reduce(const Instance& inst, int max_rule_size) {
  Instance cur = inst;
  ReductionTrace trace;
  trace.initial_colors = inst.colors;
  trace.k = inst.k;

  bool applied = true;
  while (applied) {
    applied = false;
    int limit = std::min(cur.colors - 1, max_rule_size);
    for (int i = 0; i <= limit; ++i) {
      if (i >= 1 && cur.k == 0) break;  // (c,0) is always Yes; only cleanup applies
      if (auto ob = find_obstacle(cur.graph, i, std::max(cur.k, 1))) {
        cur = apply_rule(cur, *ob);
        trace.steps.push_back(std::move(*ob));
        applied = true;
        break;  // restart from i = 0
      }
    }
  }
  trace.final_colors = cur.colors;
  return {cur, trace};
}

Coloring lift_coloring(const ReductionTrace& trace, const Instance& reduced, const Coloring& col,
                       int target_k) {
  if (target_k < 0) target_k = trace.k;
  if (target_k > trace.k)
    throw std::logic_error("lift_coloring: target k exceeds the trace's reduction parameter");
  if (reduced.colors != trace.final_colors)
    throw std::logic_error("lift_coloring: instance does not match trace");
  auto check = verify_coloring({reduced.graph, reduced.colors, target_k}, col);
  if (!check.well_formed || !check.valid)
    throw std::logic_error("lift_coloring: coloring invalid on the reduced instance: " +
                           (check.well_formed ? "not enough monochromatic edges" : check.issue));

  Coloring out = col;
  int colors = trace.final_colors;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const Obstacle& ob = *it;
    std::unordered_set<int> assigned;
    int fresh = colors;
    for (int u : ob.centers) {
      ++fresh;
      out[u] = fresh;
      assigned.insert(u);
      for (int v : ob.assignment.at(u)) {
        out[v] = fresh;
        assigned.insert(v);
      }
    }
    for (int v : ob.dominated)
      if (!assigned.count(v)) out[v] = 1;  // any used color works
    colors += ob.size();
  }
  if (colors != trace.initial_colors)
    throw std::logic_error("lift_coloring: trace color bookkeeping is inconsistent");
  return out;
}

}  // namespace loadcol
