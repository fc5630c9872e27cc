#include "dense.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "bounds.hpp"

namespace loadcol {

namespace {

long long edges_between(const Graph& g, const std::set<int>& xs, const std::set<int>& ys) {
  long long cnt = 0;
  for (int x : xs)
    for (int w : g.neighbors(x))
      if (ys.count(w)) ++cnt;
  return cnt;
}

template <typename Set>
long long degree_into(const Graph& g, int u, const Set& s) {
  long long d = 0;
  for (int w : g.neighbors(u))
    if (s.count(w)) ++d;
  return d;
}

[[noreturn]] void impossible() {
  throw std::logic_error("dense split reached a branch its edge budget rules out");
}

void defensive_verify(const Graph& g, const Coloring& col, int colors, int k,
                      const char* who) {
  auto chk = verify_coloring({g, colors, k}, col);
  if (!chk.well_formed || !chk.valid)
    throw std::logic_error(std::string(who) + " produced an invalid certificate");
}

// 2^level colors for the A-B crossing edges of g, m(A,B) >= b(2^level,k,n).
Coloring bip_solve(const Graph& g, const std::set<int>& a, const std::set<int>& b, int level,
                   int k) {
  Coloring col;
  if (level == 0) {
    if (edges_between(g, a, b) < k) impossible();
    for (int v : a) col[v] = 1;
    for (int v : b) col[v] = 1;
    return col;
  }
  const long long half = 1LL << (level - 1);
  std::set<int> a1 = a, a2, b1 = b, b2;

  // Peel off B vertices while their accumulated A-edges stay under twice the
  // half-level budget.
  bool moved = true;
  while (moved) {
    moved = false;
    long long e_a_b2 = edges_between(g, a, b2);
    for (int u : b1) {
      long long s = static_cast<long long>(b2.size());
      if (e_a_b2 + degree_into(g, u, a) <
          b_bound(half, k, static_cast<long long>(a.size()) + s + 1) + b_bound(half, k, s + 1)) {
        b1.erase(u);
        b2.insert(u);
        moved = true;
        break;
      }
    }
  }

  // Shift A vertices until both (A1,B1) and (A2,B1) meet their budgets.
  while (true) {
    long long e11 = edges_between(g, a1, b1);
    bool a1_ok = e11 >= b_bound(half, k, a1.size() + b1.size()) +
                            static_cast<long long>(a1.size());
    if (!a1_ok) impossible();
    long long e21 = edges_between(g, a2, b1);
    bool a2_low = e21 < b_bound(half, k, a2.size() + b1.size()) +
                           static_cast<long long>(a2.size());
    if (!a2_low) break;
    if (a1.empty()) impossible();
    int v = *a1.begin();
    a1.erase(v);
    a2.insert(v);
  }

  if (b1.empty()) impossible();
  int u = *b1.begin();
  std::set<int> b1u = b1;
  b1u.erase(u);
  std::set<int> b2u = b2;
  b2u.insert(u);

  Coloring low, high;
  if (edges_between(g, a1, b2u) >= b_bound(half, k, a1.size() + b2u.size())) {
    low = bip_solve(g, a2, b1u, level - 1, k);
    high = bip_solve(g, a1, b2u, level - 1, k);
  } else if (edges_between(g, a2, b2u) >= b_bound(half, k, a2.size() + b2u.size())) {
    low = bip_solve(g, a1, b1u, level - 1, k);
    high = bip_solve(g, a2, b2u, level - 1, k);
  } else {
    impossible();
  }
  for (auto [v, c] : high) low[v] = c + static_cast<int>(half);
  return low;
}

// 2^level colors for g[verts], edges within >= f(2^level,k,|verts|).
Coloring dense_solve(const Graph& g, const std::vector<int>& verts, int level, int k) {
  Coloring col;
  if (level == 0) {
    if (g.edges_within(verts) < static_cast<std::size_t>(k)) impossible();
    for (int v : verts) col[v] = 1;
    return col;
  }
  const long long half = 1LL << (level - 1);

  std::unordered_set<int> in_a;
  std::vector<int> a_vec;
  long long e_a = 0;
  for (int v : verts) {
    if (e_a >= f_bound(half, k, static_cast<long long>(a_vec.size()))) break;
    e_a += degree_into(g, v, in_a);
    in_a.insert(v);
    a_vec.push_back(v);
  }
  if (e_a < f_bound(half, k, static_cast<long long>(a_vec.size()))) impossible();

  std::vector<int> b_vec;
  for (int v : verts)
    if (!in_a.count(v)) b_vec.push_back(v);

  long long e_b = static_cast<long long>(g.edges_within(b_vec));
  if (e_b >= f_bound(half, k, static_cast<long long>(b_vec.size()))) {
    Coloring low = dense_solve(g, a_vec, level - 1, k);
    Coloring high = dense_solve(g, b_vec, level - 1, k);
    for (auto [v, c] : high) low[v] = c + static_cast<int>(half);
    return low;
  }

  // Fall back to the A-B crossing edges, which must carry the full budget.
  std::set<int> a_set(a_vec.begin(), a_vec.end()), b_set(b_vec.begin(), b_vec.end());
  std::vector<std::pair<int, int>> cross;
  for (int v : a_vec)
    for (int w : g.neighbors(v))
      if (b_set.count(w)) cross.emplace_back(std::min(v, w), std::max(v, w));
  if (static_cast<long long>(cross.size()) <
      b_bound(1LL << level, k, static_cast<long long>(verts.size())))
    impossible();
  Graph bg(verts, cross);
  return bip_solve(bg, a_set, b_set, level, k);
}

Coloring all_one(const Graph& g) {
  Coloring col;
  for (int v : g.vertices()) col[v] = 1;
  return col;
}

}  // namespace

Coloring color_star_graph(const Graph& g, int c, int k) {
  if (c < 1 || k < 1) throw std::invalid_argument("color_star_graph: need c >= 1 and k >= 1");
  if (g.num_vertices() < 2LL * c * k)
    throw std::invalid_argument("color_star_graph: fewer than 2ck vertices");
  std::vector<Component> comps = g.components();
  for (const auto& comp : comps) {
    std::size_t e = comp.edges;
    if (e < 1 || e >= 2 * static_cast<std::size_t>(k) ||
        e + 1 != comp.vertices.size())
      throw std::invalid_argument("color_star_graph: component is not a star K_{1,<2k}");
  }

  std::vector<int> remaining(comps.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  Coloring col;
  auto paint = [&](int idx, int color) {
    for (int v : comps[idx].vertices) col[v] = color;
  };

  for (int color = 1; color <= c; ++color) {
    // A single component already in [k, 2k) is monochromed as-is.
    int mid = -1;
    for (int idx : remaining) {
      std::size_t e = comps[idx].edges;
      if (e >= static_cast<std::size_t>(k) &&
          (mid == -1 || e < comps[mid].edges ||
           (e == comps[mid].edges && comps[idx].vertices.front() < comps[mid].vertices.front())))
        mid = idx;
    }
    if (mid != -1) {
      paint(mid, color);
      remaining.erase(std::find(remaining.begin(), remaining.end(), mid));
      continue;
    }
    // Otherwise take a descending-greedy prefix of small components; every
    // taken component then has more edges than the overshoot, which keeps
    // the colored set within 2k vertices.
    std::vector<int> order = remaining;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      if (comps[x].edges != comps[y].edges) return comps[x].edges > comps[y].edges;
      return comps[x].vertices.front() < comps[y].vertices.front();
    });
    std::size_t sum = 0;
    std::vector<int> taken;
    for (int idx : order) {
      if (sum >= static_cast<std::size_t>(k)) break;
      sum += comps[idx].edges;
      taken.push_back(idx);
    }
    if (sum < static_cast<std::size_t>(k))
      throw std::logic_error("color_star_graph: ran out of edges despite n >= 2ck");
    for (int idx : taken) {
      paint(idx, color);
      remaining.erase(std::find(remaining.begin(), remaining.end(), idx));
    }
  }
  for (int idx : remaining) paint(idx, 1);
  defensive_verify(g, col, c, k, "color_star_graph");
  return col;
}

Coloring color_dense_bipartite(const Graph& g, const std::vector<int>& side_a,
                               const std::vector<int>& side_b, int i, int k) {
  if (i < 0 || k < 0) throw std::invalid_argument("color_dense_bipartite: need i >= 0, k >= 0");
  std::set<int> a(side_a.begin(), side_a.end()), b(side_b.begin(), side_b.end());
  if (a.size() + b.size() != static_cast<std::size_t>(g.num_vertices()))
    throw std::invalid_argument("color_dense_bipartite: parts do not partition the vertices");
  for (int v : g.vertices())
    if (!a.count(v) && !b.count(v))
      throw std::invalid_argument("color_dense_bipartite: parts do not partition the vertices");
  for (auto [u, v] : g.edges())
    if (a.count(u) == a.count(v))
      throw std::invalid_argument("color_dense_bipartite: edge inside one part");
  if (static_cast<long long>(g.num_edges()) < b_bound(1LL << i, k, g.num_vertices()))
    throw std::invalid_argument("color_dense_bipartite: too few edges for the bound");
  if (k == 0) return all_one(g);
  Coloring col = bip_solve(g, a, b, i, k);
  defensive_verify(g, col, 1 << i, k, "color_dense_bipartite");
  return col;
}

Coloring color_dense(const Graph& g, int i, int k) {
  if (i < 0 || k < 0) throw std::invalid_argument("color_dense: need i >= 0, k >= 0");
  if (static_cast<long long>(g.num_edges()) < f_bound(1LL << i, k, g.num_vertices()))
    throw std::invalid_argument("color_dense: too few edges for the bound");
  if (k == 0) return all_one(g);
  Coloring col = dense_solve(g, g.vertices(), i, k);
  defensive_verify(g, col, 1 << i, k, "color_dense");
  return col;
}

Coloring color_dense_c(const Graph& g, int c, int k) {
  if (c < 1 || k < 0) throw std::invalid_argument("color_dense_c: need c >= 1, k >= 0");
  int cp = next_pow2(c);
  int i = 0;
  while ((1 << i) < cp) ++i;
  if (static_cast<long long>(g.num_edges()) < f_bound(cp, k, g.num_vertices()))
    throw std::invalid_argument("color_dense_c: too few edges for the bound");
  if (k == 0) return all_one(g);
  Coloring col = color_dense(g, i, k);
  for (auto& [v, cc] : col)
    if (cc > c) cc = 1;
  defensive_verify(g, col, c, k, "color_dense_c");
  return col;
}

}  // namespace loadcol
