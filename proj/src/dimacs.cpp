#include "dimacs.hpp"

#include <istream>
#include <set>
#include <sstream>

namespace loadcol {

Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edge_list;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge")
        throw ParseError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative count in problem line");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens in problem line");
    } else if (tag == "e") {
      if (n < 0) throw ParseError(lineno, "edge before problem line");
      long long u, v;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens in edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "vertex id out of range [1," + std::to_string(n) + "]");
      if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
      int a = static_cast<int>(u - 1), b = static_cast<int>(v - 1);
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) throw ParseError(lineno, "duplicate edge");
      if (static_cast<long long>(edge_list.size()) >= m)
        throw ParseError(lineno, "more edges than declared");
      edge_list.emplace_back(a, b);
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  if (static_cast<long long>(edge_list.size()) != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(edge_list.size()));
  return Graph(static_cast<int>(n), edge_list);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  // Rank-based relabeling keeps output contiguous even for sparse id sets.
  std::unordered_map<int, int> rank;
  int r = 1;
  for (int id : g.vertices()) rank[id] = r++;
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << rank[u] << " " << rank[v] << "\n";
  return out.str();
}

}  // namespace loadcol
