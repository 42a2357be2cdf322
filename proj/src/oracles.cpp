#include "fraisse/oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fraisse::oracles {

std::vector<std::vector<int>> epimorphisms_by_filter(const FinStructure& a,
                                                     const FinStructure& b) {
  std::vector<std::vector<int>> found;
  std::vector<int> map(a.size, 0);
  auto image = [&](const TupleSet& ts) {
    TupleSet out;
    for (const auto& t : ts) {
      Tuple m(t.size());
      for (size_t i = 0; i < t.size(); ++i) m[i] = map[t[i]];
      out.push_back(std::move(m));
    }
    return normalize_tuples(std::move(out));
  };
  while (true) {
    std::set<int> hit(map.begin(), map.end());
    if ((int)hit.size() == b.size) {
      bool ok = true;
      for (const auto& sym : a.sig.relations)
        if (!(image(a.rel(sym.name)) == b.rel(sym.name))) {
          ok = false;
          break;
        }
      if (ok) found.push_back(map);
    }
    int i = a.size - 1;
    while (i >= 0 && ++map[i] == b.size) map[i--] = 0;
    if (i < 0) break;
  }
  return found;
}

std::uint64_t monotone_surjection_count(int m, int n) {
  if (n > m || n < 1) return 0;
  // grid[k][j]: monotone surjections from k elements onto j elements
  std::vector<std::vector<std::uint64_t>> grid(m + 1,
                                               std::vector<std::uint64_t>(n + 1, 0));
  grid[0][0] = 1;
  for (int k = 1; k <= m; ++k)
    for (int j = 1; j <= std::min(k, n); ++j)
      grid[k][j] = grid[k - 1][j] + grid[k - 1][j - 1];
  return grid[m][n];
}

void SimpleGraph::add_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  edges.push_back({u, v});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

SimpleGraph path_graph(int n) {
  SimpleGraph g;
  g.vertices = n;
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

SimpleGraph king_grid(int side) {
  SimpleGraph g;
  g.vertices = side * side;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          int i2 = i + di, j2 = j + dj;
          if ((di || dj) && i2 >= 0 && i2 < side && j2 >= 0 && j2 < side)
            g.add_edge(i * side + j, i2 * side + j2);
        }
  return g;
}

SimpleGraph subdivision(int vertices, const std::vector<std::pair<int, int>>& edges,
                        int k) {
  SimpleGraph out;
  out.vertices = vertices;
  for (const auto& [u, v] : edges) {
    int prev = u;
    for (int step = 1; step < k; ++step) {
      int fresh = out.vertices++;
      out.add_edge(prev, fresh);
      prev = fresh;
    }
    out.add_edge(prev, v);
  }
  return out;
}

namespace {

std::vector<std::set<int>> adjacency(const SimpleGraph& g) {
  std::vector<std::set<int>> adj(g.vertices);
  for (const auto& [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

bool extend(const std::vector<std::set<int>>& a, const std::vector<std::set<int>>& b,
            std::vector<int>& map, std::vector<bool>& used, size_t next) {
  if (next == a.size()) return true;
  for (int cand = 0; cand < (int)b.size(); ++cand) {
    if (used[cand] || a[next].size() != b[cand].size()) continue;
    bool ok = true;
    for (int prev = 0; prev < (int)next && ok; ++prev)
      if (a[next].count(prev) != (bool)b[cand].count(map[prev])) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
  auto adj_a = adjacency(a);
  auto adj_b = adjacency(b);
  auto degrees = [](const std::vector<std::set<int>>& adj) {
    std::vector<size_t> ds;
    for (const auto& s : adj) ds.push_back(s.size());
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  if (degrees(adj_a) != degrees(adj_b)) return false;
  std::vector<int> map(a.vertices, -1);
  std::vector<bool> used(b.vertices, false);
  return extend(adj_a, adj_b, map, used, 0);
}

FinStructure random_structure(std::uint32_t seed, int size, int edge_percent) {
  std::mt19937 rng(seed);
  Signature sig;
  sig.relations = {{"R", 2}, {"u", 1}};
  sig.distinguished = "R";
  TupleSet r, u;
  for (int x = 0; x < size; ++x) {
    r.push_back({x, x});  // keep R reflexive so the structure is topological
    if (rng() % 100 < (std::uint32_t)edge_percent) u.push_back({x});
  }
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y)
      if (rng() % 100 < (std::uint32_t)edge_percent) {
        r.push_back({x, y});
        r.push_back({y, x});
      }
  return make_structure(std::move(sig), size, {{"R", std::move(r)}, {"u", std::move(u)}});
}

}  // namespace fraisse::oracles
