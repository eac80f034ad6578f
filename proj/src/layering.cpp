#include "antimagic/layering.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#include "antimagic/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace antimagic {

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void bfs_serial(const Graph& g, int root, std::vector<int>& layer_of) {
  std::vector<int> frontier{root};
  std::vector<int> next;
  layer_of[root] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    next.clear();
    for (int v : frontier) {
      for (const auto& [nb, e] : g.adj[v]) {
        (void)e;
        if (layer_of[nb] == -1) {
          layer_of[nb] = depth + 1;
          next.push_back(nb);
        }
      }
    }
    frontier.swap(next);
    ++depth;
  }
}

// Level-synchronous frontier expansion; threads claim vertices with CAS, so
// each vertex lands in exactly one thread's local frontier. The distances
// are the same as serial BFS by definition.
void bfs_parallel(const Graph& g, int root, std::vector<int>& layer_of) {
#if defined(_OPENMP)
  std::vector<int> frontier{root};
  std::vector<int> next;
  layer_of[root] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    next.clear();
    const int fsize = static_cast<int>(frontier.size());
#pragma omp parallel
    {
      std::vector<int> mine;
#pragma omp for nowait schedule(static)
      for (int idx = 0; idx < fsize; ++idx) {
        int v = frontier[idx];
        for (const auto& [nb, e] : g.adj[v]) {
          (void)e;
          std::atomic_ref<int> cell(layer_of[nb]);
          int expected = -1;
          if (cell.load(std::memory_order_relaxed) == -1 &&
              cell.compare_exchange_strong(expected, depth + 1,
                                           std::memory_order_relaxed)) {
            mine.push_back(nb);
          }
        }
      }
#pragma omp critical
      next.insert(next.end(), mine.begin(), mine.end());
    }
    std::sort(next.begin(), next.end());
    frontier.swap(next);
    ++depth;
  }
#else
  bfs_serial(g, root, layer_of);
#endif
}

}  // namespace

Layering bfs_layering(const Graph& g, int root, Exec exec) {
  if (root < 0 || root >= g.n)
    throw ValidationError("root vertex " + std::to_string(root) +
                          " out of range (n = " + std::to_string(g.n) + ")");
  Layering out;
  out.root = root;
  out.layer_of.assign(g.n, -1);
  if (exec == Exec::openmp) {
    bfs_parallel(g, root, out.layer_of);
  } else {
    bfs_serial(g, root, out.layer_of);
  }
  for (int v = 0; v < g.n; ++v) {
    if (out.layer_of[v] == -1) throw DisconnectedError(v);
  }
  out.depth = *std::max_element(out.layer_of.begin(), out.layer_of.end());
  out.layers.assign(out.depth + 1, {});
  for (int v = 0; v < g.n; ++v) out.layers[out.layer_of[v]].push_back(v);
  return out;
}

EdgeClasses classify_edges(const Graph& g, const Layering& layering,
                           Exec exec) {
  if (static_cast<int>(layering.layer_of.size()) != g.n)
    throw ArtifactMismatchError("layering does not match graph size");
  const int m = g.m();
  // tag per edge: 2*layer for intra, 2*layer+1 for down, -1 for a skip
  std::vector<int> tag(m);
  std::atomic<int> bad_edge{-1};

  auto tag_edge = [&](int e) {
    const auto& [u, v] = g.edges[e];
    int lu = layering.layer_of[u], lv = layering.layer_of[v];
    if (lu == lv) {
      tag[e] = 2 * lu;
    } else if (std::abs(lu - lv) == 1) {
      tag[e] = 2 * std::max(lu, lv) + 1;
    } else {
      tag[e] = -1;
      // atomic min so the reported edge id is stable across schedules
      int cur = bad_edge.load(std::memory_order_relaxed);
      while ((cur == -1 || cur > e) &&
             !bad_edge.compare_exchange_weak(cur, e)) {
      }
    }
  };

  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int e = 0; e < m; ++e) tag_edge(e);
  } else {
    for (int e = 0; e < m; ++e) tag_edge(e);
  }

  if (bad_edge.load() != -1) {
    int e = bad_edge.load();
    throw LayerSkipError(e, g.edges[e].first, g.edges[e].second);
  }

  EdgeClasses out;
  out.intra.assign(layering.depth + 1, {});
  out.down.assign(layering.depth + 1, {});
  for (int e = 0; e < m; ++e) {
    int layer = tag[e] / 2;
    if (tag[e] % 2 == 0) {
      out.intra[layer].push_back(e);
    } else {
      out.down[layer].push_back(e);
    }
  }
  return out;
}

}  // namespace antimagic
