#include "fraisse/limits.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fraisse {

LevelProperty parse_level_property(const std::string& name) {
  if (name == "reflexive") return LevelProperty::reflexive;
  if (name == "symmetric") return LevelProperty::symmetric;
  if (name == "antisymmetric") return LevelProperty::antisymmetric;
  if (name == "transitive") return LevelProperty::transitive;
  if (name == "total") return LevelProperty::total;
  if (name == "has-first") return LevelProperty::has_first;
  if (name == "has-last") return LevelProperty::has_last;
  if (name == "connected") return LevelProperty::connected;
  throw Error("unknown level property: " + name);
}

std::string to_string(LevelProperty p) {
  switch (p) {
    case LevelProperty::reflexive: return "reflexive";
    case LevelProperty::symmetric: return "symmetric";
    case LevelProperty::antisymmetric: return "antisymmetric";
    case LevelProperty::transitive: return "transitive";
    case LevelProperty::total: return "total";
    case LevelProperty::has_first: return "has-first";
    case LevelProperty::has_last: return "has-last";
    case LevelProperty::connected: return "connected";
  }
  throw Error("unknown level property");
}

namespace {

std::vector<std::vector<char>> adjacency(const FinStructure& s,
                                         const std::string& rel) {
  const RelationSymbol* sym = s.sig.find(rel);
  if (!sym) throw Error("check_level_property: unknown symbol " + rel);
  if (sym->arity != 2)
    throw Error("check_level_property: symbol " + rel + " is not binary");
  std::vector<std::vector<char>> adj(s.size, std::vector<char>(s.size, 0));
  for (const auto& t : s.rel(rel)) adj[t[0]][t[1]] = 1;
  return adj;
}

std::string claim_text(LevelProperty p) {
  switch (p) {
    case LevelProperty::reflexive:
      return "the relation contains the diagonal at every checked level, so "
             "the limit relation is reflexive";
    case LevelProperty::symmetric:
      return "the relation is symmetric at every checked level, so the limit "
             "relation is symmetric";
    case LevelProperty::antisymmetric:
      return "the relation is antisymmetric at every checked level, so the "
             "limit relation is antisymmetric";
    case LevelProperty::transitive:
      return "the relation is transitive at every checked level, so the limit "
             "relation is transitive";
    case LevelProperty::total:
      return "every pair is comparable at every checked level, so the limit "
             "relation is total";
    case LevelProperty::has_first:
      return "a least element exists at every checked level and is preserved "
             "by the bonds, so the limit has a least element";
    case LevelProperty::has_last:
      return "a greatest element exists at every checked level and is "
             "preserved by the bonds, so the limit has a greatest element";
    case LevelProperty::connected:
      return "the relation's graph is connected at every checked level, which "
             "rules out a partition of any level into two nonempty pieces "
             "with no related pair across them (finite-level claim only)";
  }
  throw Error("unknown level property");
}

}  // namespace

bool check_level_property(const FinStructure& s, const std::string& rel,
                          LevelProperty p) {
  auto adj = adjacency(s, rel);
  int n = s.size;
  switch (p) {
    case LevelProperty::reflexive:
      for (int i = 0; i < n; ++i)
        if (!adj[i][i]) return false;
      return true;
    case LevelProperty::symmetric:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (adj[i][j] != adj[j][i]) return false;
      return true;
    case LevelProperty::antisymmetric:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && adj[i][j] && adj[j][i]) return false;
      return true;
    case LevelProperty::transitive:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (adj[i][j])
            for (int k = 0; k < n; ++k)
              if (adj[j][k] && !adj[i][k]) return false;
      return true;
    case LevelProperty::total:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!adj[i][j] && !adj[j][i]) return false;
      return true;
    case LevelProperty::has_first: {
      for (int i = 0; i < n; ++i) {
        bool first = true;
        for (int j = 0; j < n && first; ++j)
          if (!adj[i][j]) first = false;
        if (first) return true;
      }
      return false;
    }
    case LevelProperty::has_last: {
      for (int i = 0; i < n; ++i) {
        bool last = true;
        for (int j = 0; j < n && last; ++j)
          if (!adj[j][i]) last = false;
        if (last) return true;
      }
      return false;
    }
    case LevelProperty::connected: {
      std::vector<int> stack = {0};
      std::vector<char> seen(n, 0);
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
          if ((adj[v][u] || adj[u][v]) && !seen[u]) {
            seen[u] = 1;
            ++reached;
            stack.push_back(u);
          }
      }
      return reached == n;
    }
  }
  throw Error("unknown level property");
}

PropertyCertificate certify(const FundamentalSequence& seq, const std::string& rel,
                            LevelProperty p, int depth) {
  PropertyCertificate cert;
  cert.relation = rel;
  cert.property = to_string(p);
  cert.depth = depth;
  cert.certified = true;
  cert.claim = claim_text(p);
  for (int n = 0; n <= depth; ++n)
    if (!check_level_property(seq.level(n), rel, p)) {
      cert.certified = false;
      cert.failing_level = n;
      cert.claim = "property fails at level " + std::to_string(n);
      break;
    }
  return cert;
}

QuotientGraph quotient_graph(const FundamentalSequence& seq, int n) {
  FinStructure s = seq.level(n);
  std::vector<int> cls = seq.vertex_classes(n);
  int vertices = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;

  QuotientGraph g;
  g.level = n;
  g.vertices = vertices;
  g.loops = check_level_property(s, s.sig.distinguished, LevelProperty::reflexive);
  std::set<std::pair<int, int>> edges;
  for (const auto& t : s.distinguished_rel()) {
    int u = cls[t[0]];
    int v = cls[t[1]];
    if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

bool quotient_coherence(const FundamentalSequence& seq, int n, int m) {
  if (n > m) throw Error("quotient_coherence: expected n <= m");
  QuotientGraph qn = quotient_graph(seq, n);
  QuotientGraph qm = quotient_graph(seq, m);
  Morphism pi = seq.bond_compose(n, m);
  std::vector<int> cls_n = seq.vertex_classes(n);
  std::vector<int> cls_m = seq.vertex_classes(m);

  // The composed bond must descend to the merged vertices.
  std::vector<int> vmap(qm.vertices, -1);
  for (size_t x = 0; x < pi.map().size(); ++x) {
    int from = cls_m[x];
    int to = cls_n[pi.map()[x]];
    if (vmap[from] == -1)
      vmap[from] = to;
    else if (vmap[from] != to)
      return false;
  }

  std::vector<char> hit(qn.vertices, 0);
  for (int v : vmap) {
    if (v == -1) return false;
    hit[v] = 1;
  }
  for (char c : hit)
    if (!c) return false;

  std::set<std::pair<int, int>> n_edges(qn.edges.begin(), qn.edges.end());
  std::set<std::pair<int, int>> covered;
  for (const auto& [u, v] : qm.edges) {
    int a = vmap[u];
    int b = vmap[v];
    if (a == b) continue;  // collapses to a vertex
    auto e = std::make_pair(std::min(a, b), std::max(a, b));
    if (!n_edges.count(e)) return false;
    covered.insert(e);
  }
  return covered.size() == n_edges.size();
}

std::string export_graph(const QuotientGraph& g, GraphFormat format) {
  if (format == GraphFormat::dot) {
    std::ostringstream os;
    os << "graph {\n";
    for (int v = 0; v < g.vertices; ++v) os << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
  }
  std::ostringstream os;
  os << "{\"edges\":[";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i) os << ',';
    os << '[' << g.edges[i].first << ',' << g.edges[i].second << ']';
  }
  os << "],\"level\":" << g.level << ",\"loops\":" << (g.loops ? "true" : "false")
     << ",\"vertices\":" << g.vertices << "}\n";
  return os.str();
}

}  // namespace fraisse
