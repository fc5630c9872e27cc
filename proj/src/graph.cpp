#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace loadcol {

void Graph::build(std::vector<int> ids, const std::vector<std::pair<int, int>>& edge_list) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("duplicate vertex id");
  if (!ids.empty() && ids.front() < 0) throw std::invalid_argument("negative vertex id");
  ids_ = std::move(ids);
  index_.clear();
  index_.reserve(ids_.size());
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) index_[ids_[i]] = i;
  adj_.assign(ids_.size(), {});
  m_ = 0;

  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edge_list) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
      throw std::invalid_argument("edge endpoint outside vertex set");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[index_[u]].push_back(v);
    adj_[index_[v]].push_back(u);
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  build(std::move(ids), edge_list);
}

Graph::Graph(std::vector<int> ids, const std::vector<std::pair<int, int>>& edge_list) {
  build(std::move(ids), edge_list);
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nb = adj_[index_.at(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Graph::neighbors(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("no vertex " + std::to_string(id));
  return adj_[it->second];
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i)
    for (int v : adj_[i])
      if (ids_[i] < v) out.emplace_back(ids_[i], v);
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::without(const std::vector<int>& removed) const {
  std::unordered_set<int> gone(removed.begin(), removed.end());
  std::vector<int> keep;
  keep.reserve(ids_.size());
  for (int id : ids_)
    if (!gone.count(id)) keep.push_back(id);
  return induced(keep);
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::unordered_set<int> in;
  for (int id : keep) {
    if (!has_vertex(id)) throw std::invalid_argument("induced: unknown vertex " + std::to_string(id));
    in.insert(id);
  }
  std::vector<std::pair<int, int>> kept_edges;
  for (int id : keep)
    for (int v : neighbors(id))
      if (id < v && in.count(v)) kept_edges.emplace_back(id, v);
  return Graph(std::vector<int>(in.begin(), in.end()), kept_edges);
}

std::size_t Graph::edges_within(const std::vector<int>& set) const {
  std::unordered_set<int> in(set.begin(), set.end());
  std::size_t count = 0;
  for (int id : set) {
    if (!has_vertex(id)) continue;
    for (int v : neighbors(id))
      if (id < v && in.count(v)) ++count;
  }
  return count;
}

std::vector<Component> Graph::components() const {
  std::vector<Component> out;
  std::unordered_set<int> visited;
  for (int start : ids_) {
    if (visited.count(start)) continue;
    Component comp;
    std::queue<int> q;
    q.push(start);
    visited.insert(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.vertices.push_back(u);
      for (int v : neighbors(u)) {
        if (u < v) ++comp.edges;
        if (!visited.count(v)) {
          visited.insert(v);
          q.push(v);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  return out;  // BFS seeds run over sorted ids, so order is by smallest id
}

Graph Graph::disjoint_union(const Graph& other) const {
  int shift = ids_.empty() ? 0 : ids_.back() + 1;
  std::vector<int> ids = ids_;
  for (int id : other.ids_) ids.push_back(id + shift);
  auto es = edges();
  for (auto [u, v] : other.edges()) es.emplace_back(u + shift, v + shift);
  return Graph(std::move(ids), es);
}

bool Graph::operator==(const Graph& other) const {
  return ids_ == other.ids_ && edges() == other.edges();
}

CertificateCheck verify_coloring(const Instance& inst, const Coloring& col) {
  CertificateCheck out;
  out.per_color.assign(inst.colors, 0);
  for (int id : inst.graph.vertices()) {
    auto it = col.find(id);
    if (it == col.end()) {
      out.well_formed = false;
      out.issue = "vertex " + std::to_string(id) + " is uncolored";
      return out;
    }
    if (it->second < 1 || it->second > inst.colors) {
      out.well_formed = false;
      out.issue = "vertex " + std::to_string(id) + " has color outside [c]";
      return out;
    }
  }
  for (auto [u, v] : inst.graph.edges())
    if (col.at(u) == col.at(v)) ++out.per_color[col.at(u) - 1];
  out.valid = true;
  for (long long n : out.per_color)
    if (n < inst.k) out.valid = false;
  return out;
}

}  // namespace loadcol
