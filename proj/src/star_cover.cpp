#include "star_cover.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace loadcol {

int StarCover::max_star_size() const {
  int best = 0;
  for (const auto& [c, ls] : stars) best = std::max(best, static_cast<int>(ls.size()));
  return best;
}

std::map<int, int> StarCover::degree_profile() const {
  std::map<int, int> out;
  for (const auto& [c, ls] : stars) ++out[static_cast<int>(ls.size())];
  return out;
}

bool check_cover(const Graph& g, const StarCover& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::unordered_set<int> covered;
  for (const auto& [center, ls] : s.stars) {
    if (!g.has_vertex(center)) return fail("center missing from graph");
    if (ls.empty()) return fail("star without leaves");
    if (!covered.insert(center).second) return fail("vertex covered twice");
    for (int leaf : ls) {
      if (!g.has_edge(center, leaf)) return fail("star edge not a graph edge");
      if (!covered.insert(leaf).second) return fail("vertex covered twice");
    }
    if (ls.size() == 1 && ls.front() < center) return fail("two-vertex star with wrong center");
  }
  if (covered.size() != static_cast<std::size_t>(g.num_vertices()))
    return fail("cover misses a vertex");
  return true;
}

StarCover initial_cover(const Graph& g) {
  for (int v : g.vertices())
    if (g.degree(v) == 0)
      throw std::invalid_argument("initial_cover: graph has an isolated vertex");

  // Spanning forest, as sets of forest neighbors.
  std::map<int, std::set<int>> forest;
  std::unordered_set<int> visited;
  for (int start : g.vertices()) {
    if (visited.count(start)) continue;
    visited.insert(start);
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (visited.insert(v).second) {
          forest[u].insert(v);
          forest[v].insert(u);
          q.push(v);
        }
    }
  }

  // Delete forest edges whose endpoints both still have other neighbors;
  // what survives is a star per component.
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (auto& [u, nb] : forest) {
      for (int v : nb) {
        if (u < v && forest[u].size() >= 2 && forest[v].size() >= 2) {
          forest[u].erase(v);
          forest[v].erase(u);
          deleted = true;
          break;
        }
      }
      if (deleted) break;
    }
  }

  StarCover cover;
  std::unordered_set<int> placed;
  for (int v : g.vertices()) {
    if (placed.count(v)) continue;
    const auto& nb = forest[v];
    if (nb.size() >= 2 || (nb.size() == 1 && forest[*nb.begin()].size() == 1 && v < *nb.begin())) {
      std::vector<int> ls(nb.begin(), nb.end());
      placed.insert(v);
      placed.insert(ls.begin(), ls.end());
      cover.stars[v] = std::move(ls);
    }
  }
  // Remaining vertices are leaves of a center seen later in id order.
  for (int v : g.vertices()) {
    if (placed.count(v)) continue;
    const auto& nb = forest[v];
    int center = *nb.begin();
    std::vector<int> ls(forest[center].begin(), forest[center].end());
    placed.insert(center);
    placed.insert(ls.begin(), ls.end());
    cover.stars[center] = std::move(ls);
  }

  std::string why;
  if (!check_cover(g, cover, &why))
    throw std::logic_error("initial_cover: produced invalid cover: " + why);
  return cover;
}

namespace {

struct CoverState {
  std::unordered_map<int, int> ctr;       // vertex -> center of its star
  std::map<int, std::set<int>> leaves;    // center -> leaf set

  bool is_center(int v) const { return ctr.at(v) == v; }
  int star_size(int center) const { return static_cast<int>(leaves.at(center).size()); }
  bool cover_edge(int u, int v) const { return ctr.at(u) == v || ctr.at(v) == u; }

  int max_size() const {
    int best = 0;
    for (const auto& [c, ls] : leaves) best = std::max(best, static_cast<int>(ls.size()));
    return best;
  }

  void move_leaf(int leaf, int from, int to) {
    leaves[from].erase(leaf);
    leaves[to].insert(leaf);
    ctr[leaf] = to;
  }
};

CoverState make_state(const StarCover& s) {
  CoverState st;
  for (const auto& [center, ls] : s.stars) {
    st.ctr[center] = center;
    for (int leaf : ls) {
      st.ctr[leaf] = center;
      st.leaves[center].insert(leaf);
    }
  }
  return st;
}

StarCover to_cover(const CoverState& st) {
  StarCover out;
  for (const auto& [center, ls] : st.leaves)
    if (!ls.empty()) out.stars[center] = std::vector<int>(ls.begin(), ls.end());
  return out;
}

// A star reduced to one leaf must keep the lower id as its center.
void reroot_if_pair(CoverState& st, int center) {
  auto& ls = st.leaves.at(center);
  if (ls.size() != 1 || *ls.begin() > center) return;
  int leaf = *ls.begin();
  st.leaves.erase(center);
  st.leaves[leaf] = {center};
  st.ctr[leaf] = leaf;
  st.ctr[center] = leaf;
}

// Leaf-rewiring move: a non-cover edge uv with u a leaf of a star that has
// at least 3 leaves and v any leaf. Returns true if a move was applied.
bool apply_leaf_rewire(const Graph& g, CoverState& st) {
  for (auto [a, b] : g.edges()) {
    if (st.cover_edge(a, b)) continue;
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (st.is_center(u) || st.is_center(v)) continue;
      int x = st.ctr.at(u);
      if (st.star_size(x) < 3) continue;
      int y = st.ctr.at(v);
      if (st.star_size(y) >= 2) {
        st.leaves[x].erase(u);
        st.leaves[y].erase(v);
        int nc = std::min(u, v), nl = std::max(u, v);
        st.ctr[nc] = nc;
        st.ctr[nl] = nc;
        st.leaves[nc] = {nl};
        reroot_if_pair(st, y);
      } else {
        // v is an endpoint of an independent edge; it becomes a K_{1,2} center.
        st.leaves[x].erase(u);
        st.leaves.erase(y);
        st.ctr[v] = v;
        st.ctr[y] = v;
        st.ctr[u] = v;
        st.leaves[v] = {y, u};
      }
      return true;
    }
  }
  return false;
}

// Alternating-path move: BFS from every maximum star's center, odd edges
// inside the cover (center to leaf), even edges outside it (leaf to another
// center). Shifts one leaf along the path when it reaches a center whose
// star is smaller by at least 2.
bool apply_path_shift(const Graph& g, CoverState& st, int max_size) {
  std::unordered_map<int, std::pair<int, int>> parent;  // center -> (prev center, leaf)
  std::unordered_set<int> visited;
  std::queue<int> q;
  for (const auto& [center, ls] : st.leaves)
    if (static_cast<int>(ls.size()) == max_size) {
      visited.insert(center);
      q.push(center);
    }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int u : st.leaves.at(x)) {
      for (int w : g.neighbors(u)) {
        if (w == x || !st.is_center(w) || visited.count(w)) continue;
        visited.insert(w);
        parent[w] = {x, u};
        if (st.star_size(w) <= max_size - 2) {
          // Walk back to the root, then shift each leaf one star forward.
          std::vector<std::pair<int, int>> links;  // (from center, leaf) -> next center
          int cur = w;
          while (parent.count(cur)) {
            auto [prev, leaf] = parent.at(cur);
            links.push_back({cur, leaf});  // leaf moves from prev to cur
            cur = prev;
          }
          for (auto it = links.rbegin(); it != links.rend(); ++it) {
            int to = it->first, leaf = it->second;
            st.move_leaf(leaf, st.ctr.at(leaf), to);
          }
          return true;
        }
        q.push(w);
      }
    }
  }
  return false;
}

Obstacle extract_obstacle(const Graph& g, const CoverState& st, int max_size) {
  // Seed with every maximum star, then absorb stars one size smaller that
  // are reachable over a non-cover edge from a current leaf.
  std::set<int> chosen;
  for (const auto& [center, ls] : st.leaves)
    if (static_cast<int>(ls.size()) == max_size) chosen.insert(center);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int c : std::vector<int>(chosen.begin(), chosen.end())) {
      for (int u : st.leaves.at(c)) {
        for (int w : g.neighbors(u)) {
          if (w == c || !st.is_center(w) || chosen.count(w)) continue;
          if (st.star_size(w) == max_size - 1) {
            chosen.insert(w);
            grew = true;
          }
        }
      }
    }
  }

  Obstacle ob;
  for (int c : chosen) {
    ob.centers.push_back(c);
    const auto& ls = st.leaves.at(c);
    ob.assignment[c] = std::vector<int>(ls.begin(), ls.end());
    ob.dominated.insert(ob.dominated.end(), ls.begin(), ls.end());
  }
  std::sort(ob.dominated.begin(), ob.dominated.end());
  return ob;
}

}  // namespace

RefineResult refine_cover(const Graph& g, StarCover s, int k, int c) {
  std::string why;
  if (!check_cover(g, s, &why))
    throw std::invalid_argument("refine_cover: invalid input cover: " + why);

  const int cap = std::max(3, k);
  CoverState st = make_state(s);
  RefineResult res;

  while (true) {
    int max_size = st.max_size();
    if (max_size <= cap) {
      res.kind = RefineResult::Kind::Cover;
      res.cover = to_cover(st);
      return res;
    }
    if (apply_leaf_rewire(g, st)) {
      ++res.moves;
      continue;
    }
    if (apply_path_shift(g, st, max_size)) {
      ++res.moves;
      continue;
    }
    Obstacle ob = extract_obstacle(g, st, max_size);
    if (ob.size() < c)
      throw NotReducedError(std::move(ob),
                            "refine_cover: found an obstacle with |V1| < c; the graph was not "
                            "reduced for (c,k)");
    std::string obwhy;
    if (!check_obstacle(g, ob, k, &obwhy))
      throw std::logic_error("refine_cover: extracted obstacle fails its invariants: " + obwhy);
    res.kind = RefineResult::Kind::Witness;
    res.witness = std::move(ob);
    return res;
  }
}

}  // namespace loadcol
