#include "fraisse/families.hpp"

#include <algorithm>

namespace fraisse {

namespace {

Signature chain_signature() {
  Signature sig;
  sig.relations = {{"R", 2}, {"le", 2}};
  sig.distinguished = "R";
  return sig;
}

std::string word_of(int value, int length) {
  std::string w(length, '0');
  for (int i = length - 1; i >= 0; --i) {
    w[i] = char('0' + (value & 1));
    value >>= 1;
  }
  return w;
}

bool compatible(std::string_view s, std::string_view u) {
  size_t m = std::min(s.size(), u.size());
  return s.substr(0, m) == u.substr(0, m);
}

}  // namespace

FinStructure chain(int k) {
  if (k < 1) throw Error("chain: size must be at least 1");
  TupleSet r, le;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i <= j) le.push_back({i, j});
      if (std::abs(i - j) <= 1) r.push_back({i, j});
    }
  return make_structure(chain_signature(), k, {{"R", std::move(r)}, {"le", std::move(le)}});
}

bool is_chain(const FinStructure& s) {
  return s.size >= 1 && s == chain(s.size);
}

FinStructure arc_level(int n) {
  if (n < 0) throw Error("arc_level: negative level");
  return chain((1 << n) + 1);
}

Morphism arc_bond(int n) {
  FinStructure from = arc_level(n + 1);
  FinStructure to = arc_level(n);
  std::vector<int> map(from.size);
  for (int k = 0; k < from.size; ++k) map[k] = k / 2;
  return Morphism(std::move(from), std::move(to), std::move(map));
}

FundamentalSequence arc_sequence() {
  return FundamentalSequence(
      "arc", [](int n) { return arc_level(n); },
      [](int, const FinStructure& from, const FinStructure&) {
        std::vector<int> map(from.size);
        for (int k = 0; k < from.size; ++k) map[k] = k / 2;
        return map;
      });
}

FundamentalSequence singleton_sequence() {
  return FundamentalSequence(
      "singleton", [](int) { return chain(1); },
      [](int, const FinStructure&, const FinStructure&) {
        return std::vector<int>{0};
      });
}

Amalgam arc_amalgamate(const Morphism& phi, const Morphism& psi) {
  if (!(phi.target() == psi.target()))
    throw Error("arc_amalgamate: the two epimorphisms must share their target");
  if (!is_chain(phi.source()) || !is_chain(psi.source()) || !is_chain(phi.target()))
    throw Error("arc_amalgamate: expects chain structures");
  if (!is_epimorphism(phi) || !is_epimorphism(psi))
    throw Error("arc_amalgamate: both maps must be epimorphisms");

  int asize = phi.target().size;
  std::vector<std::vector<int>> phi_fiber(asize), psi_fiber(asize);
  for (size_t x = 0; x < phi.map().size(); ++x)
    phi_fiber[phi.map()[x]].push_back((int)x);
  for (size_t x = 0; x < psi.map().size(); ++x)
    psi_fiber[psi.map()[x]].push_back((int)x);

  std::vector<int> theta, rho;
  for (int j = 0; j < asize; ++j) {
    int nj = (int)std::max(phi_fiber[j].size(), psi_fiber[j].size());
    for (int l = 0; l < nj; ++l) {
      theta.push_back(phi_fiber[j][std::min<size_t>(l, phi_fiber[j].size() - 1)]);
      rho.push_back(psi_fiber[j][std::min<size_t>(l, psi_fiber[j].size() - 1)]);
    }
  }
  FinStructure d = chain((int)theta.size());
  return Amalgam{d, Morphism(d, phi.source(), std::move(theta)),
                 Morphism(d, psi.source(), std::move(rho))};
}

GlueSystem dyadic_glue(int truncation_depth) {
  if (truncation_depth < 0) throw Error("dyadic_glue: negative depth");
  GlueSystem g;
  g.name = "cantor-dyadic";
  g.truncation_depth = truncation_depth;
  g.related = [](std::string_view u, std::string_view v) {
    if (u == v) return true;
    if (u.size() != v.size()) return false;
    for (size_t p = 0; p < u.size(); ++p) {
      if (u.substr(0, p) != v.substr(0, p)) return false;
      auto tail_is = [&](std::string_view w, char head, char rest) {
        if (w[p] != head) return false;
        for (size_t i = p + 1; i < w.size(); ++i)
          if (w[i] != rest) return false;
        return true;
      };
      if (tail_is(u, '0', '1') && tail_is(v, '1', '0')) return true;
      if (tail_is(u, '1', '0') && tail_is(v, '0', '1')) return true;
    }
    return false;
  };
  return g;
}

FinStructure cantor_level(const GlueSystem& g, int n) {
  if (n < 0) throw Error("cantor_level: negative level");
  if (n > g.truncation_depth)
    throw Error("cantor_level: level " + std::to_string(n) +
                " beyond truncation depth " + std::to_string(g.truncation_depth));
  int size = 1 << n;
  Signature sig;
  sig.relations.push_back({"R", 2});
  sig.distinguished = "R";
  std::map<std::string, TupleSet> interp;

  TupleSet r;
  std::vector<std::string> words(size);
  for (int i = 0; i < size; ++i) words[i] = word_of(i, n);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (g.related(words[i], words[j])) r.push_back({i, j});
  interp["R"] = normalize_tuples(std::move(r));

  for (int len = 0; len <= g.truncation_depth; ++len)
    for (int sv = 0; sv < (1 << len); ++sv) {
      std::string s = word_of(sv, len);
      std::string name = "rho_" + s;
      sig.relations.push_back({name, 1});
      TupleSet holds;
      for (int i = 0; i < size; ++i)
        if (compatible(s, words[i])) holds.push_back({i});
      interp[name] = std::move(holds);
    }
  return make_structure(std::move(sig), size, std::move(interp));
}

Morphism cantor_bond(const GlueSystem& g, int n) {
  FinStructure from = cantor_level(g, n + 1);
  FinStructure to = cantor_level(g, n);
  std::vector<int> map(from.size);
  for (int k = 0; k < from.size; ++k) map[k] = k >> 1;
  return Morphism(std::move(from), std::move(to), std::move(map));
}

FundamentalSequence cantor_sequence(const GlueSystem& g) {
  return FundamentalSequence(
      g.name, [g](int n) { return cantor_level(g, n); },
      [](int, const FinStructure& from, const FinStructure&) {
        std::vector<int> map(from.size);
        for (int k = 0; k < from.size; ++k) map[k] = k >> 1;
        return map;
      },
      g.truncation_depth);
}

std::vector<Violation> validate_glue_levels(const GlueSystem& g, int depth) {
  std::vector<Violation> out;
  depth = std::min(depth, g.truncation_depth);
  for (int n = 0; n <= depth; ++n) {
    int size = 1 << n;
    std::vector<std::string> words(size);
    for (int i = 0; i < size; ++i) words[i] = word_of(i, n);
    for (int i = 0; i < size; ++i) {
      if (!g.related(words[i], words[i]))
        out.push_back({"reflexive", "level " + std::to_string(n) + ": word " +
                                        words[i] + " not related to itself"});
      for (int j = 0; j < size; ++j)
        if (g.related(words[i], words[j]) != g.related(words[j], words[i])) {
          out.push_back({"symmetric", "level " + std::to_string(n) + ": pair " +
                                          words[i] + "," + words[j]});
        }
    }
    if (n == depth) continue;
    // Bond compatibility: restriction must carry the level-(n+1) relation
    // exactly onto the level-n relation.
    int big = size << 1;
    std::vector<std::string> up(big);
    for (int i = 0; i < big; ++i) up[i] = word_of(i, n + 1);
    for (int i = 0; i < big; ++i)
      for (int j = 0; j < big; ++j)
        if (g.related(up[i], up[j]) && !g.related(words[i >> 1], words[j >> 1]))
          out.push_back({"bond", "level " + std::to_string(n + 1) + ": pair " +
                                     up[i] + "," + up[j] +
                                     " does not restrict to a related pair"});
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (!g.related(words[i], words[j])) continue;
        bool lifted = false;
        for (int x = 2 * i; x < 2 * i + 2 && !lifted; ++x)
          for (int y = 2 * j; y < 2 * j + 2 && !lifted; ++y)
            if (g.related(up[x], up[y])) lifted = true;
        if (!lifted)
          out.push_back({"bond", "level " + std::to_string(n) + ": pair " +
                                     words[i] + "," + words[j] +
                                     " has no related lift"});
      }
  }
  return out;
}

FamilyEnumerator chain_family() {
  FamilyEnumerator f;
  f.name = "chain";
  f.sig = chain_signature();
  f.member = [](int i) { return chain(i + 1); };
  return f;
}

FamilyEnumerator singleton_family() {
  FamilyEnumerator f;
  f.name = "singleton";
  f.sig = chain_signature();
  f.member = [](int i) {
    if (i != 0) throw Error("singleton family has a single member");
    return chain(1);
  };
  f.member_count = 1;
  return f;
}

FamilyEnumerator cantor_family(const GlueSystem& g) {
  FamilyEnumerator f;
  f.name = g.name;
  f.sig = cantor_level(g, 0).sig;
  f.member = [g](int i) { return cantor_level(g, i); };
  f.member_count = g.truncation_depth + 1;
  return f;
}

FamilyEnumerator explicit_family(std::string name, std::vector<FinStructure> members) {
  if (members.empty()) throw Error("explicit_family: no members");
  for (const auto& m : members) {
    if (!(m.sig == members.front().sig))
      throw Error("explicit_family: members disagree on the signature");
    if (!validate(m).empty())
      throw Error("explicit_family: member fails validation");
  }
  FamilyEnumerator f;
  f.name = std::move(name);
  f.sig = members.front().sig;
  f.member_count = (int)members.size();
  auto shared = std::make_shared<std::vector<FinStructure>>(std::move(members));
  f.member = [shared](int i) {
    if (i < 0 || i >= (int)shared->size())
      throw Error("explicit_family: member index out of range");
    return (*shared)[i];
  };
  return f;
}

}  // namespace fraisse
