#include "pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "bounds.hpp"
#include "dense.hpp"
#include "matching.hpp"
#include "star_cover.hpp"
#include "two_color.hpp"

namespace loadcol {

namespace {

Coloring all_one(const Graph& g) {
  Coloring col;
  for (int v : g.vertices()) col[v] = 1;
  return col;
}

void must_verify(const Graph& g, const Coloring& col, int colors, int k, const char* who) {
  auto chk = verify_coloring({g, colors, k}, col);
  if (!chk.well_formed || !chk.valid)
    throw std::logic_error(std::string(who) + " produced an invalid certificate");
}

Coloring matching_coloring(const Graph& g, const std::vector<std::pair<int, int>>& edges, int c) {
  Coloring col = all_one(g);
  for (int j = 0; j < c; ++j) {
    col[edges[j].first] = j + 1;
    col[edges[j].second] = j + 1;
  }
  return col;
}

/// Certificate for a reduced graph with n >= 2ck. Throws NotReducedError if
/// the star-cover refinement uncovers an obstacle the (size-capped)
/// reduction loop missed.
std::pair<Coloring, std::string> certify_large_reduced(const Graph& g, int c, int k) {
  if (k == 1) {
    auto m = find_matching_of_size(g, c);
    if (!m) throw std::logic_error("reduced graph with >= 2c vertices has no c-edge matching");
    return {matching_coloring(g, *m, c), "matching"};
  }
  StarCover cover = initial_cover(g);
  RefineResult ref = refine_cover(g, std::move(cover), k, c);
  if (ref.kind == RefineResult::Kind::Cover) {
    std::vector<std::pair<int, int>> star_edges;
    for (const auto& [center, leaves] : ref.cover.stars)
      for (int leaf : leaves)
        star_edges.emplace_back(std::min(center, leaf), std::max(center, leaf));
    Graph sg(g.vertices(), star_edges);
    return {color_star_graph(sg, c, k), "star-cover"};
  }
  // Witness: at least c stars, each with >= k private leaves.
  Coloring col = all_one(g);
  int color = 0;
  for (int u : ref.witness.centers) {
    if (color == c) break;
    ++color;
    col[u] = color;
    for (int v : ref.witness.assignment.at(u)) col[v] = color;
  }
  return {col, "cover-witness"};
}

}  // namespace

Outcome kernelize(const Instance& inst) {
  if (inst.colors < 1) throw std::invalid_argument("kernelize: need c >= 1");
  if (inst.k < 0) throw std::invalid_argument("kernelize: need k >= 0");
  const int c = inst.colors;
  const int k = inst.k;
  Outcome out;
  out.trace.initial_colors = c;
  out.trace.final_colors = c;
  out.trace.k = k;

  if (k == 0) {
    out.verdict = Verdict::Yes;
    out.coloring = all_one(inst.graph);
    out.provenance = "zero-threshold";
    return out;
  }
  if (k == 1) {
    auto m = find_matching_of_size(inst.graph, c);
    if (!m) {
      out.verdict = Verdict::No;
      out.provenance = "matching";
      return out;
    }
    out.verdict = Verdict::Yes;
    out.coloring = matching_coloring(inst.graph, *m, c);
    out.provenance = "matching";
    must_verify(inst.graph, out.coloring, c, k, "kernelize");
    return out;
  }

  Instance cur = inst;
  ReductionTrace trace;
  trace.initial_colors = c;
  trace.k = k;
  while (true) {
    auto [red, step_trace] = reduce(cur);
    trace.steps.insert(trace.steps.end(), step_trace.steps.begin(), step_trace.steps.end());
    cur = std::move(red);
    trace.final_colors = cur.colors;
    out.trace = trace;

    const Graph& g2 = cur.graph;
    const int c2 = cur.colors;
    const long long n2 = g2.num_vertices();
    const long long m2 = static_cast<long long>(g2.num_edges());

    if (c2 == 1) {
      if (m2 >= k) {
        out.verdict = Verdict::Yes;
        out.coloring = lift_coloring(trace, cur, all_one(g2));
        out.provenance = "single-color";
        must_verify(inst.graph, out.coloring, c, k, "kernelize");
      } else {
        out.verdict = Verdict::No;
        out.provenance = "single-color";
      }
      return out;
    }

    if (n2 >= 2LL * c2 * k) {
      try {
        auto [col, tag] = certify_large_reduced(g2, c2, k);
        out.verdict = Verdict::Yes;
        out.coloring = lift_coloring(trace, cur, col);
        out.provenance = tag;
        must_verify(inst.graph, out.coloring, c, k, "kernelize");
        return out;
      } catch (const NotReducedError& e) {
        trace.steps.push_back(e.obstacle);
        cur = apply_rule(cur, e.obstacle);
        continue;
      }
    }

    if (c2 == 2 && m2 >= 8LL * k) {
      out.verdict = Verdict::Yes;
      out.coloring = lift_coloring(trace, cur, color2_dense(g2, k));
      out.provenance = "edge-dense-two";
      must_verify(inst.graph, out.coloring, c, k, "kernelize");
      return out;
    }
    if (m2 >= f_bound(next_pow2(c2), k, n2)) {
      out.verdict = Verdict::Yes;
      out.coloring = lift_coloring(trace, cur, color_dense_c(g2, c2, k));
      out.provenance = "edge-dense";
      must_verify(inst.graph, out.coloring, c, k, "kernelize");
      return out;
    }

    out.verdict = Verdict::Kernel;
    out.kernel = cur;
    out.provenance = "kernel";
    return out;
  }
}

Outcome decide(const Instance& inst, long long budget) {
  Outcome out = kernelize(inst);
  if (out.verdict != Verdict::Kernel) return out;
  ExactResult r = decide_exact(out.kernel, budget);
  if (r.status == ExactStatus::BudgetExceeded) {
    out.verdict = Verdict::Budget;
    out.provenance = "kernel-budget";
    return out;
  }
  if (r.status == ExactStatus::No) {
    out.verdict = Verdict::No;
    out.provenance = "kernel-exhausted";
    return out;
  }
  out.verdict = Verdict::Yes;
  out.coloring = lift_coloring(out.trace, out.kernel, r.coloring);
  out.provenance = "kernel-exact";
  must_verify(inst.graph, out.coloring, inst.colors, inst.k, "decide");
  return out;
}

ApproxResult approx_general(const Graph& g0, int c, long long budget) {
  if (c < 1) throw std::invalid_argument("approx_general: need c >= 1");
  ApproxResult res;

  std::vector<int> isolated;
  for (int v : g0.vertices())
    if (g0.degree(v) == 0) isolated.push_back(v);
  Graph g = g0.without(isolated);
  auto finish = [&](Coloring col) {
    for (int v : isolated) col[v] = 1;
    must_verify(g0, col, c, static_cast<int>(res.k), "approx_general");
    res.coloring = std::move(col);
  };

  const long long m = static_cast<long long>(g.num_edges());
  if (c == 1) {
    res.k = m;
    res.exact = true;
    finish(all_one(g));
    return res;
  }

  const long long k = m / kernel_edge_factor(c);
  if (k == 0) {
    auto r = max_k_exact(g, c, budget);
    if (r.budget_exceeded) {
      res.budget_exceeded = true;
      return res;
    }
    res.k = r.k_opt;
    res.exact = true;
    finish(std::move(r.coloring));
    return res;
  }

  const int ki = static_cast<int>(k);
  if (g.num_vertices() <= 2 * k * c) {
    // m >= K(c) k edges on at most 2ck vertices: dense enough for a direct
    // certificate at k.
    res.k = k;
    finish(color_dense_c(g, c, ki));
    return res;
  }

  Instance start{g, c, ki};
  auto [red, trace] = reduce(start);
  if (trace.steps.empty()) {
    try {
      auto [col, tag] = certify_large_reduced(g, c, ki);
      (void)tag;
      res.k = k;
      finish(std::move(col));
      return res;
    } catch (const NotReducedError& e) {
      trace.steps.push_back(e.obstacle);
      red = apply_rule(start, e.obstacle);
      trace.final_colors = red.colors;
    }
  }

  // A color-spending rule fired: recurse on the smaller palette.
  ApproxResult sub = approx_general(red.graph, red.colors, budget);
  if (sub.budget_exceeded) {
    res.budget_exceeded = true;
    return res;
  }
  if (sub.k >= k) {
    res.k = k;
    finish(lift_coloring(trace, red, sub.coloring, ki));
  } else {
    // The rule that produced red is also a rule at threshold sub.k + 1, so
    // an exact sub-answer below k is exact for the whole graph.
    res.k = sub.k;
    res.exact = sub.exact;
    finish(lift_coloring(trace, red, sub.coloring, static_cast<int>(sub.k)));
  }
  return res;
}

ApproxResult approx_two(const Graph& g0, double epsilon, long long budget) {
  if (!(epsilon > 0)) throw std::invalid_argument("approx_two: need epsilon > 0");
  ApproxResult res;

  std::vector<int> isolated;
  for (int v : g0.vertices())
    if (g0.degree(v) == 0) isolated.push_back(v);
  Graph g = g0.without(isolated);
  auto finish = [&](Coloring col) {
    for (int v : isolated) col[v] = 1;
    must_verify(g0, col, 2, static_cast<int>(res.k), "approx_two");
    res.coloring = std::move(col);
  };

  const long long m = static_cast<long long>(g.num_edges());
  const long long p = m / 8;
  const long long p0 = static_cast<long long>(std::ceil(3.0 / epsilon));

  if (p <= p0 - 1) {
    auto r = max_k_exact(g, 2, budget);
    if (r.budget_exceeded) {
      res.budget_exceeded = true;
      return res;
    }
    res.k = r.k_opt;
    res.exact = true;
    finish(std::move(r.coloring));
    return res;
  }

  const int pi = static_cast<int>(p);
  auto [red, trace] = reduce({g, 2, pi});
  if (trace.steps.empty()) {
    res.k = p;
    finish(color2_dense(g, pi));
    return res;
  }
  if (red.colors != 1)
    throw std::logic_error("approx_two: reduction fired without spending a color");

  const long long m2 = static_cast<long long>(red.graph.num_edges());
  if (m2 >= p) {
    res.k = p;
    finish(lift_coloring(trace, red, all_one(red.graph), pi));
    return res;
  }
  // Fewer than p edges survive: their count is exactly the optimum.
  res.k = m2;
  res.exact = true;
  finish(lift_coloring(trace, red, all_one(red.graph), static_cast<int>(m2)));
  return res;
}

}  // namespace loadcol
