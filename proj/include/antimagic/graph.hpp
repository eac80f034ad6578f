#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

// Immutable simple undirected graph with indexed edges. Vertices are dense
// 0-based ids; edges are stored canonically as (u, v) with u < v and carry
// ids in input order. All downstream tie-breaking keys off these ids.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;             // edge id -> (u, v), u < v
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id), neighbor ascending

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int other_end(int edge, int v) const {
    const auto& [a, b] = edges[edge];
    return a == v ? b : a;
  }
};

// Builds a graph from raw pairs: canonicalizes endpoint order, assigns edge
// ids in input order, sorts adjacency by neighbor id. Throws ValidationError
// on out-of-range ids, self-loops, or duplicate edges.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Text format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' and blank lines are ignored; CRLF is accepted.
// Throws ParseError (with line number) on malformed input, ids out of range,
// self-loops, and duplicate edges.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Inverse of parse_edge_list; edges in id order, "\n" line endings.
std::string write_edge_list(const Graph& g);

// Returns k when every degree equals k, k odd, k >= 3; otherwise throws
// NotRegularError / EvenDegreeError / DegreeTooSmallError.
int validate_odd_regular(const Graph& g);

// One connected component re-indexed to local dense ids.
// vertex_map[local] = original vertex id (ascending), edge_map[local] =
// original edge id (ascending), so local ids preserve the original order.
struct Component {
  Graph graph;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

// Components in order of smallest original vertex id; the edge maps
// partition the original edge ids exactly.
std::vector<Component> split_components(const Graph& g);

}  // namespace antimagic
