#pragma once

#include <vector>

#include "antimagic/exec.hpp"
#include "antimagic/graph.hpp"

namespace antimagic {

// Distance classes from a root vertex. layers[i] holds the vertices at
// distance exactly i, ascending; depth is the eccentricity of the root.
struct Layering {
  int root = 0;
  int depth = 0;
  std::vector<int> layer_of;
  std::vector<std::vector<int>> layers;
};

// Edge ids split by how they sit in the layering: intra[i] joins two vertices
// of layer i, down[i] joins layer i to layer i-1 (down[0] stays empty).
// Each bucket is ascending by edge id.
struct EdgeClasses {
  std::vector<std::vector<int>> intra;
  std::vector<std::vector<int>> down;
};

// BFS distances from root. Throws DisconnectedError naming the smallest
// unreached vertex. Distances are graph-intrinsic, so the serial and openmp
// policies (and any adjacency order) agree exactly.
Layering bfs_layering(const Graph& g, int root, Exec exec = Exec::openmp);

// Buckets every edge as intra- or down-layer. Throws LayerSkipError if an
// edge spans layers differing by >= 2 (a corrupted layering).
EdgeClasses classify_edges(const Graph& g, const Layering& layering,
                           Exec exec = Exec::openmp);

}  // namespace antimagic
