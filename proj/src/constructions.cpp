#include "fraisse/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fraisse/families.hpp"

namespace fraisse {

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  return base;
}

Tuple shifted(const Tuple& t, int offset) {
  Tuple out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[i] = t[i] + offset;
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SumStructure oplus_many(const std::vector<FinStructure>& components) {
  if (components.empty()) throw Error("oplus: no components");
  const std::string& dist = components.front().sig.distinguished;
  for (const auto& c : components) {
    if (c.sig.distinguished != dist)
      throw Error("oplus: components disagree on the distinguished symbol");
    if (!c.sig.constants.empty() || !c.sig.functions.empty())
      throw Error("oplus: relationalize components first");
  }

  SumStructure sum;
  sum.components = components;
  int offset = 0;
  for (const auto& c : components) {
    sum.offsets.push_back(offset);
    offset += c.size;
  }

  Signature sig;
  sig.distinguished = dist;
  sig.relations.push_back({dist, 2});
  std::map<std::string, TupleSet> interp;
  interp[dist] = {};
  for (size_t i = 0; i < components.size(); ++i)
    for (const auto& sym : components[i].sig.relations) {
      if (sym.name == dist) continue;
      const RelationSymbol* seen = sig.find(sym.name);
      if (seen && seen->arity != sym.arity)
        throw Error("oplus: symbol " + sym.name + " used with two arities");
      if (!seen) {
        sig.relations.push_back(sym);
        interp[sym.name] = {};
      }
    }

  std::set<std::string> taken;
  for (const auto& r : sig.relations) taken.insert(r.name);
  for (size_t i = 0; i < components.size(); ++i) {
    std::string p = fresh_name("P" + std::to_string(i + 1), taken);
    taken.insert(p);
    sum.block_symbols.push_back(p);
    sig.relations.push_back({p, 1});
    TupleSet block;
    for (int v = 0; v < components[i].size; ++v)
      block.push_back({sum.offsets[i] + v});
    interp[p] = std::move(block);
  }

  for (size_t i = 0; i < components.size(); ++i)
    for (const auto& sym : components[i].sig.relations)
      for (const auto& t : components[i].rel(sym.name))
        interp[sym.name].push_back(shifted(t, sum.offsets[i]));

  sum.structure = make_structure(std::move(sig), offset, std::move(interp));
  return sum;
}

SumStructure oplus(const FinStructure& a1, const FinStructure& a2) {
  return oplus_many({a1, a2});
}

Morphism oplus_epi(const Morphism& f1, const Morphism& f2) {
  SumStructure src = oplus(f1.source(), f2.source());
  SumStructure tgt = oplus(f1.target(), f2.target());
  std::vector<int> map(src.structure.size);
  for (size_t x = 0; x < f1.map().size(); ++x) map[x] = f1.map()[x];
  for (size_t x = 0; x < f2.map().size(); ++x)
    map[src.offsets[1] + x] = tgt.offsets[1] + f2.map()[x];
  return Morphism(std::move(src.structure), std::move(tgt.structure), std::move(map));
}

std::vector<Morphism> decompose_oplus_epi(const Morphism& f,
                                          const SumStructure& source_sum,
                                          const SumStructure& target_sum) {
  if (!(f.source() == source_sum.structure) || !(f.target() == target_sum.structure))
    throw Error("decompose: endpoints do not match the given sums");
  if (source_sum.components.size() != target_sum.components.size())
    throw Error("decompose: component counts differ");
  if (!is_epimorphism(f)) throw Error("decompose: the map is not an epimorphism");

  auto block_of = [](const SumStructure& s, int v) {
    int b = 0;
    while (b + 1 < (int)s.offsets.size() && v >= s.offsets[b + 1]) ++b;
    return b;
  };
  std::vector<Morphism> parts;
  for (size_t i = 0; i < source_sum.components.size(); ++i) {
    const auto& comp = source_sum.components[i];
    std::vector<int> map(comp.size);
    for (int x = 0; x < comp.size; ++x) {
      int y = f.map()[source_sum.offsets[i] + x];
      if (block_of(target_sum, y) != (int)i)
        throw Error("decompose: element " + std::to_string(source_sum.offsets[i] + x) +
                    " maps outside its block");
      map[x] = y - target_sum.offsets[i];
    }
    parts.emplace_back(comp, target_sum.components[i], std::move(map));
  }
  return parts;
}

namespace {

struct ProductNames {
  std::vector<std::pair<std::string, std::string>> left;   // original -> merged
  std::vector<std::pair<std::string, std::string>> right;
  std::string r1, r2;
};

ProductNames product_names(const Signature& a, const Signature& b,
                           const std::string& dist) {
  std::set<std::string> a_foreign, b_foreign;
  for (const auto& s : a.relations)
    if (s.name != dist) a_foreign.insert(s.name);
  for (const auto& s : b.relations)
    if (s.name != dist) b_foreign.insert(s.name);

  ProductNames names;
  std::set<std::string> taken = {dist};
  for (const auto& s : a.relations) {
    if (s.name == dist) continue;
    std::string merged = b_foreign.count(s.name) ? s.name + ".1" : s.name;
    merged = fresh_name(merged, taken);
    taken.insert(merged);
    names.left.push_back({s.name, merged});
  }
  for (const auto& s : b.relations) {
    if (s.name == dist) continue;
    std::string merged = a_foreign.count(s.name) ? s.name + ".2" : s.name;
    merged = fresh_name(merged, taken);
    taken.insert(merged);
    names.right.push_back({s.name, merged});
  }
  names.r1 = fresh_name("r1", taken);
  taken.insert(names.r1);
  names.r2 = fresh_name("r2", taken);
  return names;
}

}  // namespace

ProductStructure otimes(const FinStructure& a, const FinStructure& b) {
  if (a.sig.distinguished != b.sig.distinguished)
    throw Error("otimes: factors disagree on the distinguished symbol");
  if (!a.sig.constants.empty() || !b.sig.constants.empty() ||
      !a.sig.functions.empty() || !b.sig.functions.empty())
    throw Error("otimes: relationalize factors first");
  const std::string& dist = a.sig.distinguished;
  ProductNames names = product_names(a.sig, b.sig, dist);

  ProductStructure prod;
  prod.left = a;
  prod.right = b;
  prod.row_symbol = names.r1;
  prod.col_symbol = names.r2;

  int bs = b.size;
  int size = a.size * bs;
  auto pair_of = [bs](int x, int y) { return x * bs + y; };

  Signature sig;
  sig.distinguished = dist;
  sig.relations.push_back({dist, 2});
  std::map<std::string, TupleSet> interp;

  TupleSet r;
  for (const auto& ta : a.rel(dist))
    for (const auto& tb : b.rel(dist))
      r.push_back({pair_of(ta[0], tb[0]), pair_of(ta[1], tb[1])});
  interp[dist] = std::move(r);

  for (const auto& [orig, merged] : names.left) {
    int arity = a.sig.find(orig)->arity;
    sig.relations.push_back({merged, arity});
    TupleSet lifted;
    std::vector<int> cols(arity, 0);
    for (const auto& t : a.rel(orig)) {
      std::fill(cols.begin(), cols.end(), 0);
      while (true) {
        Tuple tup(arity);
        for (int i = 0; i < arity; ++i) tup[i] = pair_of(t[i], cols[i]);
        lifted.push_back(std::move(tup));
        int i = arity - 1;
        while (i >= 0 && ++cols[i] == bs) cols[i--] = 0;
        if (i < 0) break;
      }
    }
    interp[merged] = std::move(lifted);
  }
  for (const auto& [orig, merged] : names.right) {
    int arity = b.sig.find(orig)->arity;
    sig.relations.push_back({merged, arity});
    TupleSet lifted;
    std::vector<int> rows(arity, 0);
    for (const auto& t : b.rel(orig)) {
      std::fill(rows.begin(), rows.end(), 0);
      while (true) {
        Tuple tup(arity);
        for (int i = 0; i < arity; ++i) tup[i] = pair_of(rows[i], t[i]);
        lifted.push_back(std::move(tup));
        int i = arity - 1;
        while (i >= 0 && ++rows[i] == a.size) rows[i--] = 0;
        if (i < 0) break;
      }
    }
    interp[merged] = std::move(lifted);
  }

  sig.relations.push_back({names.r1, 2});
  sig.relations.push_back({names.r2, 2});
  TupleSet r1, r2;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < bs; ++y)
      for (int y2 = 0; y2 < bs; ++y2) r1.push_back({pair_of(x, y), pair_of(x, y2)});
  for (int y = 0; y < bs; ++y)
    for (int x = 0; x < a.size; ++x)
      for (int x2 = 0; x2 < a.size; ++x2) r2.push_back({pair_of(x, y), pair_of(x2, y)});
  interp[names.r1] = std::move(r1);
  interp[names.r2] = std::move(r2);

  prod.structure = make_structure(std::move(sig), size, std::move(interp));
  return prod;
}

Morphism otimes_epi(const Morphism& psi, const Morphism& theta) {
  ProductStructure src = otimes(psi.source(), theta.source());
  ProductStructure tgt = otimes(psi.target(), theta.target());
  int bs = theta.source().size;
  int ds = theta.target().size;
  std::vector<int> map(src.structure.size);
  for (int a = 0; a < psi.source().size; ++a)
    for (int b = 0; b < bs; ++b)
      map[a * bs + b] = psi.map()[a] * ds + theta.map()[b];
  return Morphism(std::move(src.structure), std::move(tgt.structure), std::move(map));
}

std::pair<Morphism, Morphism> factorize_product_epi(const Morphism& f,
                                                    const ProductStructure& source,
                                                    const ProductStructure& target) {
  if (!(f.source() == source.structure) || !(f.target() == target.structure))
    throw Error("factorize: endpoints do not match the given products");
  if (!is_epimorphism(f)) throw Error("factorize: the map is not an epimorphism");

  int bs = source.right.size;
  int ds = target.right.size;
  std::vector<int> psi(source.left.size), theta(bs);
  for (int a = 0; a < source.left.size; ++a) {
    int row = f.map()[a * bs] / ds;
    for (int b = 1; b < bs; ++b)
      if (f.map()[a * bs + b] / ds != row)
        throw Error("factorize: " + source.row_symbol + "-related pair (" +
                    std::to_string(a * bs) + "," + std::to_string(a * bs + b) +
                    ") maps to different rows");
    psi[a] = row;
  }
  for (int b = 0; b < bs; ++b) {
    int col = f.map()[b] % ds;
    for (int a = 1; a < source.left.size; ++a)
      if (f.map()[a * bs + b] % ds != col)
        throw Error("factorize: " + source.col_symbol + "-related pair (" +
                    std::to_string(b) + "," + std::to_string(a * bs + b) +
                    ") maps to different columns");
    theta[b] = col;
  }
  return {Morphism(source.left, target.left, std::move(psi)),
          Morphism(source.right, target.right, std::move(theta))};
}

namespace {

std::optional<int> combined_max_level(const FundamentalSequence& s1,
                                      const FundamentalSequence& s2) {
  if (s1.max_level() && s2.max_level())
    return std::min(*s1.max_level(), *s2.max_level());
  if (s1.max_level()) return s1.max_level();
  return s2.max_level();
}

}  // namespace

FundamentalSequence oplus_family(const FundamentalSequence& s1,
                                 const FundamentalSequence& s2) {
  auto level_fn = [s1, s2](int n) {
    return oplus(s1.level(n), s2.level(n)).structure;
  };
  auto bond_fn = [s1, s2](int n, const FinStructure& from, const FinStructure& to) {
    Morphism b1 = s1.bond(n);
    Morphism b2 = s2.bond(n);
    std::vector<int> map(from.size);
    int src_off = b1.source().size;
    int tgt_off = b1.target().size;
    for (size_t x = 0; x < b1.map().size(); ++x) map[x] = b1.map()[x];
    for (size_t x = 0; x < b2.map().size(); ++x)
      map[src_off + x] = tgt_off + b2.map()[x];
    if (!is_epimorphism(Morphism(from, to, map)))
      throw Error("oplus_family: bond " + std::to_string(n) +
                  " is not an epimorphism");
    return map;
  };
  return FundamentalSequence(s1.name() + "+" + s2.name(), level_fn, bond_fn,
                             combined_max_level(s1, s2));
}

FundamentalSequence otimes_family(const FundamentalSequence& s1,
                                  const FundamentalSequence& s2) {
  auto level_fn = [s1, s2](int n) {
    return otimes(s1.level(n), s2.level(n)).structure;
  };
  auto bond_fn = [s1, s2](int n, const FinStructure& from, const FinStructure& to) {
    Morphism b1 = s1.bond(n);
    Morphism b2 = s2.bond(n);
    int bs = b2.source().size;
    int ds = b2.target().size;
    std::vector<int> map(from.size);
    for (size_t a = 0; a < b1.map().size(); ++a)
      for (int b = 0; b < bs; ++b)
        map[a * bs + b] = b1.map()[a] * ds + b2.map()[b];
    if (!is_epimorphism(Morphism(from, to, map)))
      throw Error("otimes_family: bond " + std::to_string(n) +
                  " is not an epimorphism");
    return map;
  };
  return FundamentalSequence(s1.name() + "x" + s2.name(), level_fn, bond_fn,
                             combined_max_level(s1, s2));
}

AnchorFn chain_extrema() {
  return [](const FinStructure& s) {
    const TupleSet& le = s.rel("le");
    auto least = [&](bool flip) {
      for (int x = 0; x < s.size; ++x) {
        bool ok = true;
        for (int y = 0; y < s.size && ok; ++y) {
          Tuple t = flip ? Tuple{y, x} : Tuple{x, y};
          if (!tuple_set_contains(le, t)) ok = false;
        }
        if (ok) return x;
      }
      throw Error("chain_extrema: no order extremum");
    };
    return std::vector<std::pair<std::string, int>>{{"min", least(false)},
                                                    {"max", least(true)}};
  };
}

namespace {

struct GlueLayout {
  std::vector<std::pair<int, std::string>> keys;  // (component, anchor name)
  std::vector<std::vector<int>> s_classes;        // key indices, full closure
  std::vector<std::vector<int>> merge_classes;    // cross-component closure only
};

GlueLayout glue_layout(const GlueSpec& spec) {
  GlueLayout layout;
  std::map<std::pair<int, std::string>, int> key_id;
  auto intern = [&](const AnchorRef& r) {
    if (r.component < 0 || r.component >= (int)spec.components.size())
      throw Error("identify: anchor component out of range");
    auto key = std::make_pair(r.component, r.anchor);
    auto it = key_id.find(key);
    if (it != key_id.end()) return it->second;
    int id = (int)layout.keys.size();
    layout.keys.push_back(key);
    key_id.emplace(key, id);
    return id;
  };
  for (const auto& [a, b] : spec.identified) {
    intern(a);
    intern(b);
  }
  UnionFind full((int)layout.keys.size());
  UnionFind cross((int)layout.keys.size());
  for (const auto& [a, b] : spec.identified) {
    int x = intern(a);
    int y = intern(b);
    full.unite(x, y);
    if (layout.keys[x].first != layout.keys[y].first) cross.unite(x, y);
  }
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < (int)layout.keys.size(); ++i)
    by_root[full.find(i)].push_back(i);
  for (auto& [root, members] : by_root) layout.s_classes.push_back(members);
  by_root.clear();
  for (int i = 0; i < (int)layout.keys.size(); ++i)
    by_root[cross.find(i)].push_back(i);
  for (auto& [root, members] : by_root) layout.merge_classes.push_back(members);
  return layout;
}

}  // namespace

FundamentalSequence identify(const GlueSpec& spec) {
  if (spec.components.empty()) throw Error("identify: no components");
  GlueSpec local = spec;
  if (local.anchors.empty())
    local.anchors.assign(local.components.size(), chain_extrema());
  if (local.anchors.size() != local.components.size())
    throw Error("identify: anchor scheme count mismatch");

  auto layout = std::make_shared<GlueLayout>(glue_layout(local));
  auto comps = std::make_shared<std::vector<FundamentalSequence>>(local.components);
  auto anchors = std::make_shared<std::vector<AnchorFn>>(local.anchors);

  // Realized global index of every anchor key at level n, plus block offsets.
  auto realize = [comps, anchors, layout](int n, std::vector<int>* offsets_out)
      -> std::vector<int> {
    std::vector<FinStructure> levels;
    std::vector<int> offsets;
    int off = 0;
    for (const auto& c : *comps) {
      offsets.push_back(off);
      FinStructure l = c.level(n);
      off += l.size;
      levels.push_back(std::move(l));
    }
    std::vector<int> realized(layout->keys.size(), -1);
    for (size_t k = 0; k < layout->keys.size(); ++k) {
      const auto& [comp, name] = layout->keys[k];
      for (const auto& [nm, el] : (*anchors)[comp](levels[comp]))
        if (nm == name) realized[k] = offsets[comp] + el;
      if (realized[k] == -1)
        throw Error("identify: component " + std::to_string(comp) +
                    " has no anchor named " + name + " at level " +
                    std::to_string(n));
    }
    if (offsets_out) *offsets_out = offsets;
    return realized;
  };

  auto level_fn = [comps, layout, realize](int n) {
    std::vector<FinStructure> levels;
    for (const auto& c : *comps) levels.push_back(c.level(n));
    SumStructure sum = oplus_many(levels);
    std::vector<int> realized = realize(n, nullptr);

    std::set<std::string> taken;
    for (const auto& r : sum.structure.sig.relations) taken.insert(r.name);
    std::string s_name = fresh_name("S", taken);

    TupleSet s_rel = sum.structure.distinguished_rel();
    for (const auto& cls : layout->s_classes)
      for (int x : cls)
        for (int y : cls)
          if (x != y) s_rel.push_back({realized[x], realized[y]});

    FinStructure out = sum.structure;
    out.sig.relations.push_back({s_name, 2});
    out.sig.distinguished = s_name;
    out.interp[s_name] = normalize_tuples(std::move(s_rel));
    return out;
  };

  auto bond_fn = [comps, layout, realize](int n, const FinStructure& from,
                                          const FinStructure& to) {
    std::vector<int> map(from.size);
    int src_off = 0, tgt_off = 0;
    for (const auto& c : *comps) {
      Morphism b = c.bond(n);
      for (size_t x = 0; x < b.map().size(); ++x)
        map[src_off + x] = tgt_off + b.map()[x];
      src_off += b.source().size;
      tgt_off += b.target().size;
    }
    std::vector<int> above = realize(n + 1, nullptr);
    std::vector<int> below = realize(n, nullptr);
    for (size_t k = 0; k < layout->keys.size(); ++k)
      if (map[above[k]] != below[k])
        throw Error("identify: anchor (" + std::to_string(layout->keys[k].first) +
                    "," + layout->keys[k].second + ") is not bond-stable at level " +
                    std::to_string(n + 1) + ", element " +
                    std::to_string(above[k]));
    if (!is_epimorphism(Morphism(from, to, map)))
      throw Error("identify: bond " + std::to_string(n) +
                  " does not carry the identified relation exactly");
    return map;
  };

  auto class_fn = [layout, realize](int n, const FinStructure& level) {
    std::vector<int> realized = realize(n, nullptr);
    UnionFind uf(level.size);
    for (const auto& cls : layout->merge_classes)
      for (size_t i = 1; i < cls.size(); ++i)
        uf.unite(realized[cls[i - 1]], realized[cls[i]]);
    std::vector<int> out(level.size);
    for (int v = 0; v < level.size; ++v) out[v] = uf.find(v);
    return out;
  };

  std::optional<int> max_level;
  for (const auto& c : *comps)
    if (c.max_level())
      max_level = max_level ? std::min(*max_level, *c.max_level()) : *c.max_level();

  std::string name = "glue(";
  for (size_t i = 0; i < comps->size(); ++i)
    name += (i ? "," : "") + (*comps)[i].name();
  name += ")";
  return FundamentalSequence(name, level_fn, bond_fn, max_level, class_fn);
}

FundamentalSequence graph_family(const GraphInput& g) {
  if (g.vertices < 1) throw Error("graph_family: empty vertex set");
  if (g.edges.empty()) throw Error("graph_family: edge set must be non-empty");
  for (const auto& [u, v] : g.edges)
    if (u < 0 || u >= g.vertices || v < 0 || v >= g.vertices)
      throw Error("graph_family: edge endpoint out of range");

  GlueSpec spec;
  std::vector<std::vector<AnchorRef>> at_vertex(g.vertices);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    spec.components.push_back(arc_sequence());
    spec.anchors.push_back(chain_extrema());
    at_vertex[g.edges[e].first].push_back({(int)e, "min"});
    at_vertex[g.edges[e].second].push_back({(int)e, "max"});
  }
  for (const auto& ends : at_vertex)
    for (size_t i = 0; i < ends.size(); ++i)
      for (size_t j = i + 1; j < ends.size(); ++j)
        spec.identified.push_back({ends[i], ends[j]});
  return identify(spec);
}

}  // namespace fraisse
