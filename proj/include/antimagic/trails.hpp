#pragma once

#include <vector>

#include "antimagic/exec.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/layering.hpp"

namespace antimagic {

// One bipartite slice between consecutive layers: upper = V_i, lower =
// V_{i-1}, edge_ids = the down-edges joining them (ascending). Vertex and
// edge ids are global; slices never copy the graph.
struct BipartiteSlice {
  int layer = 0;
  std::vector<int> upper;
  std::vector<int> lower;
  std::vector<int> edge_ids;
};

BipartiteSlice make_slice(const Layering& layering, const EdgeClasses& classes,
                          int layer);

// Walk that never repeats an edge. vertices[j-1] -- edge_ids[j-1] --
// vertices[j]; vertices.size() == edge_ids.size() + 1. Open trails are kept
// oriented so the smaller endpoint comes first.
struct Trail {
  std::vector<int> vertices;
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(edge_ids.size()); }
  bool odd() const { return length() % 2 == 1; }
  bool closed() const {
    return length() > 0 && vertices.front() == vertices.back();
  }
  int front_vertex() const { return vertices.front(); }
  int back_vertex() const { return vertices.back(); }
};

// Result of the slice decomposition: one sigma edge per upper vertex plus
// edge-disjoint open trails covering the rest of the slice, with at most one
// trail endpoint per vertex. Trails are sorted by (smaller endpoint, first
// edge id).
struct LayerDecomposition {
  int layer = 0;
  std::vector<int> upper;        // ascending, same as the slice
  std::vector<int> sigma_edges;  // aligned with upper
  std::vector<Trail> trails;

  // Edge ids not claimed by sigma, i.e. the union of the trails.
  std::vector<int> trail_edge_ids() const;
  int sigma_of(int u) const;  // -1 if u is not an upper vertex
};

// sigma(u) = the edge to u's smallest-id neighbor on the lower side.
// Throws IsolatedUError if an upper vertex has no slice edge.
std::vector<int> choose_initial_sigma(const Graph& g, const BipartiteSlice& s);

// Greedy cover of the non-sigma edges: start vertices scanned in ascending
// id, each walk extends along the smallest unused edge id until stuck.
// May return closed trails.
std::vector<Trail> greedy_trails(const Graph& g, const BipartiteSlice& s,
                                 const std::vector<int>& sigma_edges);

// Turns trails[index] (which must be closed) into an open trail, either by
// splicing it with an open trail that ends on it, or by swapping one trail
// edge with the sigma edge of an upper vertex on it. Mutates sigma_edges and
// trails in place; dead slots become empty trails.
void open_closed_trail(const Graph& g, const BipartiteSlice& s, int index,
                       std::vector<int>& sigma_edges,
                       std::vector<Trail>& trails);

// Splices pairs of open trails sharing an endpoint until every vertex ends
// at most one open trail. A splice may produce a closed trail; it is left in
// place for the caller to reopen. Returns true if anything changed.
bool merge_trails(std::vector<Trail>& trails);

// Full decomposition: initial sigma, greedy trails, then the open/merge loop
// to a fixed point. Verifies every postcondition before returning (throws
// InvariantViolation on failure).
LayerDecomposition decompose_slice(const Graph& g, const BipartiteSlice& s);

// Decomposes every slice of the layering; index 0 of the result is unused.
// Slices are independent, so the openmp policy runs them concurrently.
std::vector<LayerDecomposition> decompose_layers(const Graph& g,
                                                 const Layering& layering,
                                                 const EdgeClasses& classes,
                                                 Exec exec = Exec::openmp);

}  // namespace antimagic
