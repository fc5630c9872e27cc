#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace loadcol {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// DIMACS-like text: header "p edge <n> <m>", then m lines "e <u> <v>" with
/// 1-indexed endpoints. Comment lines starting with 'c' and blank lines are
/// skipped. Self-loops, duplicate edges and count mismatches are errors.
/// External vertex j maps to internal id j-1.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Emits "p edge n m" plus edges sorted lexicographically, normalized u < v,
/// with 1-indexed ids assigned by rank in the sorted vertex list.
std::string serialize_graph(const Graph& g);

}  // namespace loadcol
