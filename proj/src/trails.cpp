#include "antimagic/trails.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "antimagic/errors.hpp"

namespace antimagic {

namespace {

int index_in(const std::vector<int>& sorted, int value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) return -1;
  return static_cast<int>(it - sorted.begin());
}

// Open trails are stored with the smaller endpoint first so that "first edge
// id" is a well-defined deterministic key.
void canonicalize(Trail& t) {
  if (t.edge_ids.empty() || t.closed()) return;
  if (t.vertices.front() > t.vertices.back()) {
    std::reverse(t.vertices.begin(), t.vertices.end());
    std::reverse(t.edge_ids.begin(), t.edge_ids.end());
  }
}

int min_edge_id(const Trail& t) {
  return *std::min_element(t.edge_ids.begin(), t.edge_ids.end());
}

}  // namespace

std::vector<int> LayerDecomposition::trail_edge_ids() const {
  std::vector<int> out;
  for (const Trail& t : trails)
    out.insert(out.end(), t.edge_ids.begin(), t.edge_ids.end());
  return out;
}

int LayerDecomposition::sigma_of(int u) const {
  int i = index_in(upper, u);
  return i < 0 ? -1 : sigma_edges[i];
}

BipartiteSlice make_slice(const Layering& layering, const EdgeClasses& classes,
                          int layer) {
  if (layer < 1 || layer > layering.depth)
    throw ArtifactMismatchError("slice layer out of range");
  BipartiteSlice s;
  s.layer = layer;
  s.upper = layering.layers[layer];
  s.lower = layering.layers[layer - 1];
  s.edge_ids = classes.down[layer];
  return s;
}

std::vector<int> choose_initial_sigma(const Graph& g,
                                      const BipartiteSlice& s) {
  const int nu = static_cast<int>(s.upper.size());
  std::vector<int> sigma(nu, -1);
  std::vector<int> best_neighbor(nu, std::numeric_limits<int>::max());
  for (int e : s.edge_ids) {
    const auto& [a, b] = g.edges[e];
    int ia = index_in(s.upper, a);
    int ib = index_in(s.upper, b);
    int ui, w;
    if (ia >= 0 && ib < 0) {
      ui = ia;
      w = b;
    } else if (ib >= 0 && ia < 0) {
      ui = ib;
      w = a;
    } else {
      throw ArtifactMismatchError("slice edge " + std::to_string(e) +
                                  " does not join upper to lower");
    }
    if (index_in(s.lower, w) < 0)
      throw ArtifactMismatchError("slice edge " + std::to_string(e) +
                                  " has an endpoint outside the slice");
    if (w < best_neighbor[ui]) {
      best_neighbor[ui] = w;
      sigma[ui] = e;
    }
  }
  for (int i = 0; i < nu; ++i) {
    if (sigma[i] == -1) throw IsolatedUError(s.upper[i]);
  }
  return sigma;
}

std::vector<Trail> greedy_trails(const Graph& g, const BipartiteSlice& s,
                                 const std::vector<int>& sigma_edges) {
  std::vector<int> verts(s.upper.size() + s.lower.size());
  std::merge(s.upper.begin(), s.upper.end(), s.lower.begin(), s.lower.end(),
             verts.begin());
  std::vector<int> edges = s.edge_ids;
  std::sort(edges.begin(), edges.end());

  const int nv = static_cast<int>(verts.size());
  const int ne = static_cast<int>(edges.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge pos, other)
  for (int pos = 0; pos < ne; ++pos) {
    const auto& [a, b] = g.edges[edges[pos]];
    int la = index_in(verts, a);
    int lb = index_in(verts, b);
    if (la < 0 || lb < 0)
      throw ArtifactMismatchError("slice edge endpoint outside the slice");
    adj[la].emplace_back(pos, lb);
    adj[lb].emplace_back(pos, la);
  }

  std::vector<char> used(ne, 0);
  for (int se : sigma_edges) {
    int pos = index_in(edges, se);
    if (pos < 0) throw ArtifactMismatchError("sigma edge is not a slice edge");
    used[pos] = 1;
  }

  // Per-vertex cursor into the (edge-id ascending) incidence list; edges only
  // ever become used, so cursors never back up.
  std::vector<int> cursor(nv, 0);
  auto next_unused = [&](int v) -> int {
    int& c = cursor[v];
    const auto& list = adj[v];
    while (c < static_cast<int>(list.size()) && used[list[c].first]) ++c;
    return c < static_cast<int>(list.size()) ? c : -1;
  };

  std::vector<Trail> out;
  for (int v = 0; v < nv; ++v) {
    while (next_unused(v) != -1) {
      Trail t;
      t.vertices.push_back(verts[v]);
      int cur = v;
      while (true) {
        int c = next_unused(cur);
        if (c == -1) break;
        const auto& [pos, other] = adj[cur][c];
        used[pos] = 1;
        t.edge_ids.push_back(edges[pos]);
        t.vertices.push_back(verts[other]);
        cur = other;
      }
      canonicalize(t);
      out.push_back(std::move(t));
    }
  }
  return out;
}

void open_closed_trail(const Graph& g, const BipartiteSlice& s, int index,
                       std::vector<int>& sigma_edges,
                       std::vector<Trail>& trails) {
  if (index < 0 || index >= static_cast<int>(trails.size()) ||
      trails[index].length() == 0)
    throw InvariantViolation("open_closed_trail: bad trail index");
  Trail t = trails[index];
  if (!t.closed())
    throw InvariantViolation("open_closed_trail: trail is already open");
  const int L = t.length();

  std::set<int> on_trail(t.vertices.begin(), t.vertices.end());

  // Prefer splicing with an open trail that ends on this one; choose the
  // smallest (vertex, first edge id) candidate.
  int best_v = std::numeric_limits<int>::max();
  int best_fe = std::numeric_limits<int>::max();
  int best_idx = -1;
  for (int oi = 0; oi < static_cast<int>(trails.size()); ++oi) {
    if (oi == index) continue;
    const Trail& o = trails[oi];
    if (o.length() == 0 || o.closed()) continue;
    int fe = o.edge_ids.front();
    for (int v : {o.front_vertex(), o.back_vertex()}) {
      if (!on_trail.count(v)) continue;
      if (std::tie(v, fe) < std::tie(best_v, best_fe)) {
        best_v = v;
        best_fe = fe;
        best_idx = oi;
      }
    }
  }

  if (best_idx >= 0) {
    int pos = 0;
    while (t.vertices[pos] != best_v) ++pos;
    Trail res;
    res.vertices.reserve(L + trails[best_idx].length() + 1);
    for (int j = pos; j <= L; ++j) res.vertices.push_back(t.vertices[j]);
    for (int j = 1; j <= pos; ++j) res.vertices.push_back(t.vertices[j]);
    for (int j = pos; j < L; ++j) res.edge_ids.push_back(t.edge_ids[j]);
    for (int j = 0; j < pos; ++j) res.edge_ids.push_back(t.edge_ids[j]);

    Trail o = std::move(trails[best_idx]);
    if (o.front_vertex() != best_v) {
      std::reverse(o.vertices.begin(), o.vertices.end());
      std::reverse(o.edge_ids.begin(), o.edge_ids.end());
    }
    res.vertices.insert(res.vertices.end(), o.vertices.begin() + 1,
                        o.vertices.end());
    res.edge_ids.insert(res.edge_ids.end(), o.edge_ids.begin(),
                        o.edge_ids.end());
    canonicalize(res);
    trails[index] = std::move(res);
    trails[best_idx] = Trail{};
    return;
  }

  // No open trail touches it: swap one trail edge with the sigma edge of the
  // smallest upper vertex on the trail. The trail keeps its length, trades
  // edge uw for the old sigma edge uv, and becomes open (endpoints w and v).
  int u = std::numeric_limits<int>::max();
  for (int j = 0; j < L; ++j) {
    int v = t.vertices[j];
    if (v < u && index_in(s.upper, v) >= 0) u = v;
  }
  if (u == std::numeric_limits<int>::max())
    throw InvariantViolation("closed trail has no upper vertex");
  int j_at = 0;
  while (t.vertices[j_at] != u) ++j_at;

  int ui = index_in(s.upper, u);
  int edge_uw = t.edge_ids[j_at];
  int old_sigma = sigma_edges[ui];
  int v_other = g.other_end(old_sigma, u);
  sigma_edges[ui] = edge_uw;

  Trail res;
  res.vertices.reserve(L + 1);
  for (int j = j_at + 1; j <= L; ++j) res.vertices.push_back(t.vertices[j]);
  for (int j = 1; j <= j_at; ++j) res.vertices.push_back(t.vertices[j]);
  res.vertices.push_back(v_other);
  for (int j = j_at + 1; j < L; ++j) res.edge_ids.push_back(t.edge_ids[j]);
  for (int j = 0; j < j_at; ++j) res.edge_ids.push_back(t.edge_ids[j]);
  res.edge_ids.push_back(old_sigma);
  canonicalize(res);
  trails[index] = std::move(res);
}

bool merge_trails(std::vector<Trail>& trails) {
  // endpoint vertex -> (first edge id, trail index) for open trails
  std::map<int, std::set<std::pair<int, int>>> reg;
  std::set<int> pending;  // vertices with >= 2 open trail endpoints

  auto reg_add = [&](int idx) {
    const Trail& t = trails[idx];
    if (t.length() == 0 || t.closed()) return;
    int fe = t.edge_ids.front();
    for (int v : {t.front_vertex(), t.back_vertex()}) {
      auto& entries = reg[v];
      entries.insert({fe, idx});
      if (entries.size() >= 2) pending.insert(v);
    }
  };
  auto reg_remove = [&](int idx) {
    const Trail& t = trails[idx];
    if (t.length() == 0 || t.closed()) return;
    int fe = t.edge_ids.front();
    for (int v : {t.front_vertex(), t.back_vertex()}) {
      auto it = reg.find(v);
      it->second.erase({fe, idx});
      if (it->second.size() < 2) pending.erase(v);
      if (it->second.empty()) reg.erase(it);
    }
  };

  for (int i = 0; i < static_cast<int>(trails.size()); ++i) reg_add(i);

  bool changed = false;
  while (!pending.empty()) {
    int v = *pending.begin();
    auto entries = reg.find(v)->second;  // copy; reg_remove mutates the set
    auto it = entries.begin();
    int ai = it->second;
    ++it;
    int bi = it->second;
    reg_remove(ai);
    reg_remove(bi);

    Trail a = std::move(trails[ai]);
    Trail b = std::move(trails[bi]);
    if (a.back_vertex() != v) {
      std::reverse(a.vertices.begin(), a.vertices.end());
      std::reverse(a.edge_ids.begin(), a.edge_ids.end());
    }
    if (b.front_vertex() != v) {
      std::reverse(b.vertices.begin(), b.vertices.end());
      std::reverse(b.edge_ids.begin(), b.edge_ids.end());
    }
    a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1,
                      b.vertices.end());
    a.edge_ids.insert(a.edge_ids.end(), b.edge_ids.begin(), b.edge_ids.end());
    canonicalize(a);
    trails[ai] = std::move(a);
    trails[bi] = Trail{};
    reg_add(ai);  // no-op when the splice came out closed
    changed = true;
  }
  return changed;
}

namespace {

// Postcondition check for decompose_slice; everything recomputed from the
// graph and the returned pieces.
void verify_decomposition(const Graph& g, const BipartiteSlice& s,
                          const std::vector<int>& sigma_edges,
                          const std::vector<Trail>& trails) {
  auto fail = [](const std::string& what) {
    throw InvariantViolation("slice decomposition: " + what);
  };

  if (sigma_edges.size() != s.upper.size()) fail("sigma size mismatch");
  for (size_t i = 0; i < s.upper.size(); ++i) {
    const auto& [a, b] = g.edges[sigma_edges[i]];
    if (a != s.upper[i] && b != s.upper[i])
      fail("sigma edge not incident to its vertex");
  }

  // exact partition of the slice edges into sigma and the trails
  std::vector<int> covered = sigma_edges;
  for (const Trail& t : trails)
    covered.insert(covered.end(), t.edge_ids.begin(), t.edge_ids.end());
  std::vector<int> expected = s.edge_ids;
  std::sort(covered.begin(), covered.end());
  std::sort(expected.begin(), expected.end());
  if (covered != expected) fail("sigma + trails is not a partition of the slice");

  std::unordered_map<int, int> endpoint_count;
  std::unordered_map<int, int> hat_degree;
  std::set<int> sigma_set(sigma_edges.begin(), sigma_edges.end());
  for (int e : s.edge_ids) {
    if (sigma_set.count(e)) continue;
    hat_degree[g.edges[e].first] += 1;
    hat_degree[g.edges[e].second] += 1;
  }

  for (const Trail& t : trails) {
    if (t.length() == 0) fail("empty trail");
    if (t.closed()) fail("closed trail in final decomposition");
    if (t.vertices.size() != t.edge_ids.size() + 1) fail("trail shape");
    bool upper_side = index_in(s.upper, t.vertices[0]) >= 0;
    for (int j = 0; j < t.length(); ++j) {
      const auto& [a, b] = g.edges[t.edge_ids[j]];
      int x = t.vertices[j], y = t.vertices[j + 1];
      if (!((a == x && b == y) || (a == y && b == x)))
        fail("trail edge does not join consecutive vertices");
      bool next_upper = index_in(s.upper, y) >= 0;
      if (next_upper == upper_side) fail("trail does not alternate sides");
      upper_side = next_upper;
    }
    endpoint_count[t.front_vertex()] += 1;
    endpoint_count[t.back_vertex()] += 1;
  }

  for (const auto& [v, c] : endpoint_count) {
    if (c > 1) fail("vertex " + std::to_string(v) + " ends two trails");
  }
  for (const auto& [v, d] : hat_degree) {
    int ends = endpoint_count.count(v) ? endpoint_count.at(v) : 0;
    if (ends % 2 != d % 2)
      fail("parity mismatch at vertex " + std::to_string(v));
  }
}

}  // namespace

LayerDecomposition decompose_slice(const Graph& g, const BipartiteSlice& s) {
  LayerDecomposition d;
  d.layer = s.layer;
  d.upper = s.upper;
  d.sigma_edges = choose_initial_sigma(g, s);
  std::vector<Trail> trails = greedy_trails(g, s, d.sigma_edges);

  // Open every closed trail, merge trails sharing an endpoint, repeat until
  // stable. Merging shrinks the trail count; opening shrinks the closed
  // count without growing the trail count, so this terminates.
  while (true) {
    int closed_idx = -1, closed_key = std::numeric_limits<int>::max();
    for (int i = 0; i < static_cast<int>(trails.size()); ++i) {
      if (trails[i].length() == 0 || !trails[i].closed()) continue;
      int key = min_edge_id(trails[i]);
      if (key < closed_key) {
        closed_key = key;
        closed_idx = i;
      }
    }
    if (closed_idx >= 0) {
      open_closed_trail(g, s, closed_idx, d.sigma_edges, trails);
      continue;
    }
    if (merge_trails(trails)) continue;
    break;
  }

  for (Trail& t : trails) {
    if (t.length() > 0) d.trails.push_back(std::move(t));
  }
  std::sort(d.trails.begin(), d.trails.end(),
            [](const Trail& a, const Trail& b) {
              return std::make_pair(a.front_vertex(), a.edge_ids.front()) <
                     std::make_pair(b.front_vertex(), b.edge_ids.front());
            });

  verify_decomposition(g, s, d.sigma_edges, d.trails);
  return d;
}

std::vector<LayerDecomposition> decompose_layers(const Graph& g,
                                                 const Layering& layering,
                                                 const EdgeClasses& classes,
                                                 Exec exec) {
  const int p = layering.depth;
  std::vector<LayerDecomposition> out(p + 1);
  std::vector<std::exception_ptr> errors(p + 1);

  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 1; i <= p; ++i) {
      try {
        out[i] = decompose_slice(g, make_slice(layering, classes, i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (int i = 1; i <= p; ++i) {
      try {
        out[i] = decompose_slice(g, make_slice(layering, classes, i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (int i = 1; i <= p; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  return out;
}

}  // namespace antimagic
