#include "fraisse/epi.hpp"

#include <algorithm>

namespace fraisse {

namespace {

bool image_matches(const Morphism& m) {
  const auto& a = m.source();
  const auto& b = m.target();
  Tuple scratch;
  for (const auto& r : a.sig.relations) {
    const TupleSet& src = a.rel(r.name);
    TupleSet image;
    image.reserve(src.size());
    for (const auto& t : src) {
      scratch.resize(t.size());
      for (size_t i = 0; i < t.size(); ++i) scratch[i] = m.map()[t[i]];
      image.push_back(scratch);
    }
    if (normalize_tuples(std::move(image)) != b.rel(r.name)) return false;
  }
  return true;
}

struct Search {
  const FinStructure& a;
  const FinStructure& b;
  const EnumOptions& opt;
  int n, k;

  // Tuples grouped by the source element at which they become fully
  // assigned (their maximum entry).
  struct Pending {
    int sym;
    const Tuple* tuple;
  };
  std::vector<std::vector<Pending>> completed_at;
  std::vector<const TupleSet*> target_sets;

  // Unary bookkeeping: for each unary symbol, which source/target elements
  // carry it, how many uncovered target elements remain and how many
  // unassigned sources could still cover one.
  struct Unary {
    std::vector<char> on_source;
    std::vector<char> on_target;
    std::vector<int> covers;  // per target element: sources mapped onto it
    int uncovered = 0;
    int sources_left = 0;
  };
  std::vector<Unary> unary;

  std::vector<int> map;
  std::vector<int> hit;  // per target element: preimage count
  int covered = 0;

  std::vector<Morphism> out;
  std::vector<std::vector<int>> auts;  // target automorphism maps
  std::shared_ptr<const FinStructure> src_shared, tgt_shared;

  Search(const FinStructure& a_, const FinStructure& b_, const EnumOptions& o)
      : a(a_), b(b_), opt(o), n(a_.size), k(b_.size) {
    completed_at.resize(n);
    target_sets.reserve(a.sig.relations.size());
    for (size_t s = 0; s < a.sig.relations.size(); ++s) {
      const auto& r = a.sig.relations[s];
      target_sets.push_back(&b.rel(r.name));
      for (const auto& t : a.rel(r.name)) {
        int mx = 0;
        for (int v : t) mx = std::max(mx, v);
        completed_at[mx].push_back({(int)s, &t});
      }
      if (r.arity == 1) {
        Unary u;
        u.on_source.assign(n, 0);
        u.on_target.assign(k, 0);
        u.covers.assign(k, 0);
        for (const auto& t : a.rel(r.name)) u.on_source[t[0]] = 1;
        for (const auto& t : b.rel(r.name)) u.on_target[t[0]] = 1;
        for (int v = 0; v < n; ++v) u.sources_left += u.on_source[v];
        for (int v = 0; v < k; ++v) u.uncovered += u.on_target[v];
        unary.push_back(std::move(u));
      }
    }
    map.assign(n, -1);
    hit.assign(k, 0);
    src_shared = std::make_shared<const FinStructure>(a);
    tgt_shared = std::make_shared<const FinStructure>(b);
  }

  bool done() const { return opt.max_results && out.size() >= opt.max_results; }

  bool forward_ok(int v) const {
    Tuple scratch;
    for (const auto& p : completed_at[v]) {
      const Tuple& t = *p.tuple;
      scratch.resize(t.size());
      for (size_t i = 0; i < t.size(); ++i) scratch[i] = map[t[i]];
      if (!tuple_set_contains(*target_sets[p.sym], scratch)) return false;
    }
    return true;
  }

  bool prefix_minimal(int len) const {
    for (const auto& alpha : auts) {
      for (int i = 0; i < len; ++i) {
        int lhs = alpha[map[i]];
        if (lhs < map[i]) return false;
        if (lhs > map[i]) break;
      }
    }
    return true;
  }

  void dfs(int v) {
    if (done()) return;
    if (v == n) {
      if (covered != k) return;
      Morphism m(src_shared, tgt_shared, map);
      if (image_matches(m)) out.push_back(std::move(m));
      return;
    }
    const std::vector<int>* cand = nullptr;
    if (!opt.allowed.empty()) cand = &opt.allowed[v];
    int limit = cand ? (int)cand->size() : k;
    for (int ci = 0; ci < limit; ++ci) {
      int t = cand ? (*cand)[ci] : ci;
      map[v] = t;
      bool fresh = hit[t] == 0;
      ++hit[t];
      if (fresh) ++covered;
      for (auto& u : unary)
        if (u.on_source[v]) {
          --u.sources_left;
          if (u.on_target[t] && u.covers[t]++ == 0) --u.uncovered;
        }

      bool ok = forward_ok(v);
      if (ok && k - covered > n - v - 1) ok = false;
      if (ok)
        for (const auto& u : unary)
          if (u.sources_left < u.uncovered) {
            ok = false;
            break;
          }
      if (ok && !auts.empty() && !prefix_minimal(v + 1)) ok = false;
      if (ok) dfs(v + 1);

      for (auto& u : unary)
        if (u.on_source[v]) {
          ++u.sources_left;
          if (u.on_target[t] && --u.covers[t] == 0) ++u.uncovered;
        }
      if (fresh) --covered;
      --hit[t];
      map[v] = -1;
      if (done()) return;
    }
  }
};

}  // namespace

bool is_epimorphism(const Morphism& m) {
  if (!(m.source().sig == m.target().sig))
    throw Error("is_epimorphism: signature mismatch");
  std::vector<char> seen(m.target().size, 0);
  for (int v : m.map()) seen[v] = 1;
  for (char c : seen)
    if (!c) return false;
  return image_matches(m);
}

bool is_isomorphism(const Morphism& m) {
  if (m.source().size != m.target().size) return false;
  std::vector<char> seen(m.target().size, 0);
  for (int v : m.map()) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return is_epimorphism(m);
}

std::vector<Morphism> enumerate_epimorphisms(const FinStructure& a,
                                             const FinStructure& b,
                                             const EnumOptions& opt) {
  if (!(a.sig == b.sig))
    throw Error("enumerate_epimorphisms: signature mismatch");
  if (!opt.allowed.empty() && (int)opt.allowed.size() != a.size)
    throw Error("enumerate_epimorphisms: candidate list length mismatch");
  if (b.size > a.size) return {};
  Search s(a, b, opt);
  if (opt.up_to_target_automorphisms) {
    for (const auto& m : enumerate_epimorphisms(b, b)) s.auts.push_back(m.map());
  }
  s.dfs(0);
  return std::move(s.out);
}

std::vector<Morphism> enumerate_automorphisms(const FinStructure& a) {
  return enumerate_epimorphisms(a, a);
}

EpiClassification unique_epimorphism(const FinStructure& a, const FinStructure& b) {
  auto all = enumerate_epimorphisms(a, b);
  EpiClassification c;
  c.count = all.size();
  if (all.empty())
    c.kind = EpiClassification::Kind::none;
  else if (all.size() == 1) {
    c.kind = EpiClassification::Kind::unique;
    c.witness = all.front();
  } else
    c.kind = EpiClassification::Kind::multiple;
  return c;
}

}  // namespace fraisse
