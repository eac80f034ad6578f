#include "antimagic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "antimagic/errors.hpp"

namespace antimagic {

namespace {

uint64_t edge_key(int n, int u, int v) {
  return static_cast<uint64_t>(u) * static_cast<uint64_t>(n) +
         static_cast<uint64_t>(v);
}

// Parses a whole line as exactly `count` non-negative integers.
bool parse_ints(const std::string& line, int count, long long* out) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (int i = 0; i < count; ++i) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto [next, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc() || next == p) return false;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  return p == end;
}

}  // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  Graph g;
  g.n = n;
  g.edges.reserve(edges.size());
  std::unordered_set<uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("vertex id out of range: (" + std::to_string(a) +
                            "," + std::to_string(b) + ") with n = " +
                            std::to_string(n));
    if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
    int u = std::min(a, b), v = std::max(a, b);
    if (!seen.insert(edge_key(n, u, v)).second)
      throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    g.edges.emplace_back(u, v);
  }
  g.adj.resize(n);
  for (int e = 0; e < g.m(); ++e) {
    const auto& [u, v] = g.edges[e];
    g.adj[u].emplace_back(v, e);
    g.adj[v].emplace_back(u, e);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long header[2] = {0, 0};
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::pair<int, int>> raw;
  std::unordered_set<uint64_t> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    if (!have_header) {
      if (!parse_ints(line, 2, header))
        throw ParseError(lineno, "expected header \"n m\", got \"" + line + "\"");
      n = header[0];
      m = header[1];
      if (n < 0 || m < 0) throw ParseError(lineno, "negative n or m");
      if (n > (1LL << 30) || m > (1LL << 31))
        throw ParseError(lineno, "graph too large");
      have_header = true;
      raw.reserve(m);
      seen.reserve(m * 2);
      continue;
    }

    if (static_cast<long long>(raw.size()) == m)
      throw ParseError(lineno, "extra edge line after " + std::to_string(m) +
                                   " edges: \"" + line + "\"");
    long long uv[2];
    if (!parse_ints(line, 2, uv))
      throw ParseError(lineno, "expected edge \"u v\", got \"" + line + "\"");
    long long a = uv[0], b = uv[1];
    if (a >= n || b >= n)
      throw ParseError(lineno, "vertex id out of range: " +
                                   std::to_string(std::max(a, b)) + " >= n = " +
                                   std::to_string(n));
    if (a == b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
    int u = static_cast<int>(std::min(a, b));
    int v = static_cast<int>(std::max(a, b));
    if (!seen.insert(edge_key(static_cast<int>(n), u, v)).second)
      throw ParseError(lineno, "duplicate edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ")");
    raw.emplace_back(u, v);
  }

  if (!have_header) throw ParseError(lineno, "missing header \"n m\"");
  if (static_cast<long long>(raw.size()) != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(raw.size()));
  return make_graph(static_cast<int>(n), raw);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  out += std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
  for (const auto& [u, v] : g.edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

int validate_odd_regular(const Graph& g) {
  if (g.n == 0) throw ValidationError("graph has no vertices");
  int k = g.degree(0);
  for (int v = 1; v < g.n; ++v) {
    if (g.degree(v) != k) throw NotRegularError(0, v, k, g.degree(v));
  }
  if (k % 2 == 0) throw EvenDegreeError(k);
  if (k < 3) throw DegreeTooSmallError(k);
  return k;
}

std::vector<Component> split_components(const Graph& g) {
  std::vector<int> comp_of(g.n, -1);
  int num_comps = 0;
  std::vector<int> queue;
  for (int start = 0; start < g.n; ++start) {
    if (comp_of[start] != -1) continue;
    int c = num_comps++;
    comp_of[start] = c;
    queue.assign(1, start);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (const auto& [nb, e] : g.adj[v]) {
        (void)e;
        if (comp_of[nb] == -1) {
          comp_of[nb] = c;
          queue.push_back(nb);
        }
      }
    }
  }

  std::vector<Component> comps(num_comps);
  std::vector<int> local_id(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    auto& map = comps[comp_of[v]].vertex_map;
    local_id[v] = static_cast<int>(map.size());
    map.push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> local_edges(num_comps);
  for (int e = 0; e < g.m(); ++e) {
    const auto& [u, v] = g.edges[e];
    int c = comp_of[u];
    comps[c].edge_map.push_back(e);
    local_edges[c].emplace_back(local_id[u], local_id[v]);
  }
  for (int c = 0; c < num_comps; ++c) {
    comps[c].graph = make_graph(static_cast<int>(comps[c].vertex_map.size()),
                                local_edges[c]);
  }
  return comps;
}

}  // namespace antimagic
