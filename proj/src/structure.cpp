#include "fraisse/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fraisse {

namespace {

std::string tuple_str(const Tuple& t) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

}  // namespace

TupleSet normalize_tuples(TupleSet tuples) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return tuples;
}

bool tuple_set_contains(const TupleSet& set, const Tuple& t) {
  return std::binary_search(set.begin(), set.end(), t);
}

const RelationSymbol* Signature::find(const std::string& name) const {
  for (const auto& r : relations)
    if (r.name == name) return &r;
  return nullptr;
}

const TupleSet& FinStructure::rel(const std::string& name) const {
  auto it = interp.find(name);
  if (it == interp.end()) throw Error("no interpretation for symbol " + name);
  return it->second;
}

FinStructure make_structure(Signature sig, int size,
                            std::map<std::string, TupleSet> interp) {
  FinStructure s{std::move(sig), size, std::move(interp)};
  for (auto& [name, tuples] : s.interp) tuples = normalize_tuples(std::move(tuples));
  return s;
}

bool structure_less(const FinStructure& a, const FinStructure& b) {
  if (a.size != b.size) return a.size < b.size;
  if (a.sig.relations != b.sig.relations)
    return a.sig.relations < b.sig.relations;
  if (a.sig.distinguished != b.sig.distinguished)
    return a.sig.distinguished < b.sig.distinguished;
  return a.interp < b.interp;
}

namespace {

void validate_signature(const Signature& sig, std::vector<Violation>& out) {
  std::set<std::string> names;
  for (const auto& r : sig.relations) {
    if (r.name.empty()) out.push_back({"signature", "empty relation name"});
    if (r.arity < 1)
      out.push_back({"signature", "relation " + r.name + " has arity < 1"});
    if (!names.insert(r.name).second)
      out.push_back({"signature", "duplicate symbol name " + r.name});
  }
  for (const auto& c : sig.constants)
    if (!names.insert(c).second)
      out.push_back({"signature", "duplicate symbol name " + c});
  for (const auto& [f, ar] : sig.functions) {
    if (ar < 1)
      out.push_back({"signature", "function " + f + " has arity < 1"});
    if (!names.insert(f).second)
      out.push_back({"signature", "duplicate symbol name " + f});
  }
  const RelationSymbol* d = sig.find(sig.distinguished);
  if (!d)
    out.push_back({"signature",
                   "distinguished symbol " + sig.distinguished + " not declared"});
  else if (d->arity != 2)
    out.push_back({"signature",
                   "distinguished symbol " + sig.distinguished + " is not binary"});
}

void validate_relations(const FinStructure& s, std::vector<Violation>& out) {
  for (const auto& r : s.sig.relations) {
    auto it = s.interp.find(r.name);
    if (it == s.interp.end()) {
      out.push_back({"coverage", "no interpretation for symbol " + r.name});
      continue;
    }
    for (const auto& t : it->second) {
      if ((int)t.size() != r.arity) {
        out.push_back({"arity", "tuple " + tuple_str(t) + " in " + r.name +
                                    " has wrong arity"});
        continue;
      }
      for (int v : t)
        if (v < 0 || v >= s.size) {
          out.push_back({"range", "tuple " + tuple_str(t) + " in " + r.name +
                                      " leaves the universe"});
          break;
        }
    }
  }
  for (const auto& [name, tuples] : s.interp) {
    (void)tuples;
    if (!s.sig.find(name))
      out.push_back({"unknown-symbol", "interpretation for undeclared symbol " + name});
  }
}

}  // namespace

std::vector<Violation> validate(const FinStructure& s) {
  std::vector<Violation> out;
  validate_signature(s.sig, out);
  if (s.size < 1) out.push_back({"size", "universe must be non-empty"});
  validate_relations(s, out);
  if (!s.sig.constants.empty() || !s.sig.functions.empty())
    out.push_back({"pre-relational",
                   "constants or functions declared on a plain relational structure"});
  return out;
}

std::vector<Violation> validate(const PartialStructure& p) {
  std::vector<Violation> out;
  validate_signature(p.base.sig, out);
  if (p.base.size < 1) out.push_back({"size", "universe must be non-empty"});
  validate_relations(p.base, out);

  std::set<std::string> declared_consts(p.base.sig.constants.begin(),
                                        p.base.sig.constants.end());
  for (const auto& c : p.base.sig.constants) {
    auto it = p.constant_values.find(c);
    if (it == p.constant_values.end())
      out.push_back({"constant", "no value for constant " + c});
    else if (it->second < 0 || it->second >= p.base.size)
      out.push_back({"constant", "constant " + c + " leaves the universe"});
  }
  for (const auto& [c, v] : p.constant_values) {
    (void)v;
    if (!declared_consts.count(c))
      out.push_back({"constant", "value for undeclared constant " + c});
  }

  std::set<std::string> declared_funcs;
  for (const auto& [f, arity] : p.base.sig.functions) {
    declared_funcs.insert(f);
    auto it = p.function_tables.find(f);
    if (it == p.function_tables.end()) {
      out.push_back({"function", "no table for function " + f});
      continue;
    }
    std::set<Tuple> args_seen;
    bool shape_ok = true;
    for (const auto& row : it->second) {
      if ((int)row.size() != arity + 1) {
        out.push_back({"function", "row " + tuple_str(row) + " of " + f +
                                       " has wrong width"});
        shape_ok = false;
        continue;
      }
      bool in_range = true;
      for (int v : row)
        if (v < 0 || v >= p.base.size) in_range = false;
      if (!in_range) {
        out.push_back({"function", "row " + tuple_str(row) + " of " + f +
                                       " leaves the universe"});
        shape_ok = false;
        continue;
      }
      Tuple args(row.begin(), row.end() - 1);
      if (!args_seen.insert(args).second)
        out.push_back({"function", f + " maps arguments " + tuple_str(args) +
                                       " to two values"});
    }
    if (shape_ok) {
      long long want = 1;
      for (int i = 0; i < arity; ++i) want *= p.base.size;
      if ((long long)args_seen.size() != want)
        out.push_back({"function", "table for " + f + " is not total"});
    }
  }
  for (const auto& [f, tbl] : p.function_tables) {
    (void)tbl;
    if (!declared_funcs.count(f))
      out.push_back({"function", "table for undeclared function " + f});
  }

  // Names the relationalized structure will introduce must be free.
  std::set<std::string> taken;
  for (const auto& r : p.base.sig.relations) taken.insert(r.name);
  for (const auto& c : p.base.sig.constants)
    if (!taken.insert("R_" + c).second)
      out.push_back({"signature", "derived name R_" + c + " already in use"});
  for (const auto& [f, arity] : p.base.sig.functions) {
    (void)arity;
    if (!taken.insert("R_" + f).second)
      out.push_back({"signature", "derived name R_" + f + " already in use"});
  }
  return out;
}

FinStructure relationalize(const PartialStructure& p) {
  auto report = validate(p);
  if (!report.empty())
    throw Error("relationalize: invalid input: " + report.front().kind + ": " +
                report.front().detail);

  FinStructure out;
  out.size = p.base.size;
  out.sig.relations = p.base.sig.relations;
  out.sig.distinguished = p.base.sig.distinguished;
  out.interp = p.base.interp;
  for (const auto& c : p.base.sig.constants) {
    std::string name = "R_" + c;
    out.sig.relations.push_back({name, 1});
    out.interp[name] = {{p.constant_values.at(c)}};
  }
  for (const auto& [f, arity] : p.base.sig.functions) {
    std::string name = "R_" + f;
    out.sig.relations.push_back({name, arity + 1});
    out.interp[name] = normalize_tuples(p.function_tables.at(f));
  }
  return out;
}

bool equal(const FinStructure& a, const FinStructure& b) { return a == b; }

}  // namespace fraisse
