#include "two_color.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "matching.hpp"

namespace loadcol {

namespace {

[[noreturn]] void impossible() {
  throw std::logic_error("two-color split reached a branch its edge budget rules out");
}

void defensive_verify(const Graph& g, const Coloring& col, int k, const char* who) {
  auto chk = verify_coloring({g, 2, k}, col);
  if (!chk.well_formed || !chk.valid)
    throw std::logic_error(std::string(who) + " produced an invalid certificate");
}

long long degree_into(const Graph& g, int u, const std::set<int>& s) {
  long long d = 0;
  for (int w : g.neighbors(u))
    if (s.count(w)) ++d;
  return d;
}

long long edges_between(const Graph& g, const std::set<int>& xs, const std::set<int>& ys) {
  long long cnt = 0;
  for (int x : xs)
    for (int w : g.neighbors(x))
      if (ys.count(w)) ++cnt;
  return cnt;
}

Coloring paint(const Graph& g, const std::set<int>& twos) {
  Coloring col;
  for (int v : g.vertices()) col[v] = twos.count(v) ? 2 : 1;
  return col;
}

}  // namespace

Coloring color2_small_components(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("color2_small_components: need k >= 1");
  if (g.num_edges() < 3 * static_cast<std::size_t>(k) - 2)
    throw std::invalid_argument("color2_small_components: fewer than 3k-2 edges");
  std::vector<Component> comps = g.components();
  for (const auto& comp : comps)
    if (comp.edges >= static_cast<std::size_t>(k))
      throw std::invalid_argument("color2_small_components: component with >= k edges");

  std::vector<int> order(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (comps[x].edges != comps[y].edges) return comps[x].edges > comps[y].edges;
    return comps[x].vertices.front() < comps[y].vertices.front();
  });

  long long side1 = 0, side2 = 0;
  std::set<int> twos;
  for (int idx : order) {
    if (side1 <= side2) {
      side1 += static_cast<long long>(comps[idx].edges);
    } else {
      side2 += static_cast<long long>(comps[idx].edges);
      twos.insert(comps[idx].vertices.begin(), comps[idx].vertices.end());
    }
  }
  Coloring col = paint(g, twos);
  defensive_verify(g, col, k, "color2_small_components");
  return col;
}

Coloring color2_high_degree(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("color2_high_degree: need k >= 1");
  std::vector<Component> comps = g.components();
  const Component* big = nullptr;
  long long outside = 0;
  for (const auto& comp : comps) {
    if (comp.edges >= static_cast<std::size_t>(k)) {
      if (big) throw std::invalid_argument("color2_high_degree: several components with >= k edges");
      big = &comp;
    } else {
      outside += static_cast<long long>(comp.edges);
    }
  }
  if (!big) throw std::invalid_argument("color2_high_degree: no component with >= k edges");
  if (outside >= k)
    throw std::invalid_argument("color2_high_degree: >= k edges outside the big component");
  int delta = g.max_degree();
  if (delta < 3LL * k - 2 * outside)
    throw std::invalid_argument("color2_high_degree: max degree below 3k-2m'");

  int u = -1;
  for (int v : g.vertices())
    if (g.degree(v) == delta) {
      u = v;
      break;
    }

  // Greedily collect pairs near u until, together with the edges outside the
  // big component, color 1 owns k edges. Each productive step picks at most
  // two vertices and gains at least one edge, so at most 2(k - m') vertices
  // of N(u) end up colored 1.
  std::set<int> picked;
  long long inside = 0;
  for (int w : g.neighbors(u)) {
    if (inside + outside >= k) break;
    if (g.degree(w) < 2) continue;  // leaf neighbor, unusable
    if (!picked.count(w)) {
      inside += degree_into(g, w, picked);
      picked.insert(w);
    }
    if (inside + outside >= k) break;
    int partner = -1;
    for (int p : g.neighbors(w)) {
      if (p == u || picked.count(p)) continue;
      partner = p;
      break;
    }
    if (partner != -1) {
      inside += degree_into(g, partner, picked);
      picked.insert(partner);
    }
  }
  if (inside + outside < k)
    throw std::logic_error("color2_high_degree: pairing fell short; graph was not reduced");

  std::set<int> twos;
  twos.insert(u);
  for (int w : g.neighbors(u))
    if (!picked.count(w)) twos.insert(w);
  if (static_cast<long long>(twos.size()) - 1 < k)
    throw std::logic_error("color2_high_degree: fewer than k uncolored neighbors of u remain");
  Coloring col = paint(g, twos);
  defensive_verify(g, col, k, "color2_high_degree");
  return col;
}

Coloring color2_low_degree(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("color2_low_degree: need k >= 1");
  if (g.max_degree() >= 3 * k)
    throw std::invalid_argument("color2_low_degree: max degree must be < 3k");
  if (g.num_edges() < 8 * static_cast<std::size_t>(k))
    throw std::invalid_argument("color2_low_degree: fewer than 8k edges");

  std::vector<Component> comps = g.components();
  const Component* big = nullptr;
  for (const auto& comp : comps)
    if (comp.edges >= static_cast<std::size_t>(k)) {
      big = &comp;
      break;
    }
  if (!big) return color2_small_components(g, k);

  if (k == 1) {
    // Max degree <= 2 and m >= 8 guarantee two disjoint edges.
    auto mm = greedy_maximal_matching(g);
    if (mm.size() < 2) impossible();
    std::set<int> twos{mm[1].first, mm[1].second};
    Coloring col = paint(g, twos);
    defensive_verify(g, col, k, "color2_low_degree");
    return col;
  }

  // Grow A inside the big component until it holds k+d >= k edges.
  std::set<int> a;
  long long e_a = 0;
  a.insert(big->vertices.front());
  while (e_a < k) {
    int pick = -1;
    for (int v : big->vertices)
      if (!a.count(v) && degree_into(g, v, a) > 0) {
        pick = v;
        break;
      }
    if (pick == -1) impossible();
    e_a += degree_into(g, pick, a);
    a.insert(pick);
  }
  // Prune vertices with at most d internal neighbors; |E(A)| stays >= k.
  while (true) {
    long long d = e_a - k;
    int rem = -1;
    for (int v : a)
      if (degree_into(g, v, a) <= d) {
        rem = v;
        break;
      }
    if (rem == -1) break;
    e_a -= degree_into(g, rem, a);
    a.erase(rem);
  }

  std::set<int> b;
  for (int v : g.vertices())
    if (!a.count(v)) b.insert(v);
  if (g.edges_within(std::vector<int>(b.begin(), b.end())) >= static_cast<std::size_t>(k)) {
    Coloring col = paint(g, b);
    defensive_verify(g, col, k, "color2_low_degree");
    return col;
  }

  auto e = [&](const std::set<int>& xs, const std::set<int>& ys) {
    return edges_between(g, xs, ys);
  };
  auto done = [&](std::set<int> twos) {
    Coloring col = paint(g, std::move(twos));
    defensive_verify(g, col, k, "color2_low_degree");
    return col;
  };
  auto unite = [](const std::set<int>& xs, const std::set<int>& ys) {
    std::set<int> out = xs;
    out.insert(ys.begin(), ys.end());
    return out;
  };

  int y = -1;
  long long best = -1;
  for (int u : a) {
    long long nb = degree_into(g, u, b);
    if (nb > best) {
      best = nb;
      y = u;
    }
  }
  std::set<int> a1 = a, a2{y}, b1 = b, b2;
  a1.erase(y);
  std::set<int> yset{y};

  if (e(a1, b1) <= k + static_cast<long long>(a1.size())) impossible();

  if (best > k) {
    // y sees more than k of B; confine B1 to N(y) and rebalance.
    std::vector<int> mv;
    for (int v : b1)
      if (!g.has_edge(y, v)) mv.push_back(v);
    for (int v : mv) {
      b1.erase(v);
      b2.insert(v);
    }
    if (e(a1, b2) >= k) return done(unite(yset, b1));
    while (e(yset, b1) >= k + 1 && e(a1, b1) >= k + static_cast<long long>(a1.size())) {
      int v = *b1.begin();
      b1.erase(v);
      b2.insert(v);
      if (e(yset, b2) >= k) return done(unite(a1, b1));
      if (e(a1, b2) >= k) return done(unite(yset, b1));
    }
    if (e(a1, b1) < k + static_cast<long long>(a1.size())) impossible();
    // Now |E({y},B1)| = k and B1 lies inside N(y), so no A vertex sees more
    // than k of B1; fall through with the current partition.
  }

  // Every A vertex sees at most k of B1. Peel B vertices whose accumulated
  // A-edges stay under 2k, then shift A vertices until both crossings hold.
  while (true) {
    long long e_a_b2 = e(a, b2);
    int mv = -1;
    for (int v : b1)
      if (e_a_b2 + degree_into(g, v, a) < 2LL * k) {
        mv = v;
        break;
      }
    if (mv == -1) break;
    b1.erase(mv);
    b2.insert(mv);
  }
  while (!a1.empty() && e(a1, b1) >= k + static_cast<long long>(a1.size()) &&
         e(a2, b1) < k + static_cast<long long>(a2.size())) {
    int v = *a1.begin();
    a1.erase(v);
    a2.insert(v);
  }
  if (e(a1, b1) < k + static_cast<long long>(a1.size())) impossible();
  if (e(a2, b1) < k + static_cast<long long>(a2.size())) impossible();
  if (b1.empty()) impossible();

  int u = *b1.begin();
  std::set<int> b1u = b1;
  b1u.erase(u);
  std::set<int> b2u = b2;
  b2u.insert(u);
  if (e(a1, b2u) >= k) return done(unite(a2, b1u));
  if (e(a2, b2u) >= k) return done(unite(a1, b1u));
  impossible();
}

Coloring color2_dense(const Graph& g, int k) {
  if (k <= 0) {
    Coloring col;
    for (int v : g.vertices()) col[v] = 1;
    return col;
  }
  if (g.num_edges() < 8 * static_cast<std::size_t>(k))
    throw std::invalid_argument("color2_dense: fewer than 8k edges");
  std::vector<Component> comps = g.components();
  std::vector<const Component*> big;
  long long outside = 0;
  for (const auto& comp : comps) {
    if (comp.edges >= static_cast<std::size_t>(k))
      big.push_back(&comp);
    else
      outside += static_cast<long long>(comp.edges);
  }
  if (big.size() >= 2) {
    std::set<int> twos(big[1]->vertices.begin(), big[1]->vertices.end());
    Coloring col = paint(g, twos);
    defensive_verify(g, col, k, "color2_dense");
    return col;
  }
  if (big.empty()) return color2_small_components(g, k);
  if (outside >= k) {
    std::set<int> twos;
    for (int v : g.vertices()) twos.insert(v);
    for (int v : big[0]->vertices) twos.erase(v);
    Coloring col = paint(g, twos);
    defensive_verify(g, col, k, "color2_dense");
    return col;
  }
  if (g.max_degree() >= 3LL * k - 2 * outside) return color2_high_degree(g, k);
  return color2_low_degree(g, k);
}

}  // namespace loadcol
