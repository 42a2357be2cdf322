#include "fraisse/io.hpp"

#include <fstream>

#include "fraisse/families.hpp"

namespace fraisse::io {

namespace {

json signature_to_json(const Signature& sig) {
  json rels = json::array();
  for (const auto& r : sig.relations)
    rels.push_back({{"name", r.name}, {"arity", r.arity}});
  json out = {{"relations", rels}, {"distinguished", sig.distinguished}};
  if (!sig.constants.empty()) out["constants"] = sig.constants;
  if (!sig.functions.empty()) {
    json fns = json::array();
    for (const auto& [name, arity] : sig.functions)
      fns.push_back({{"name", name}, {"arity", arity}});
    out["functions"] = fns;
  }
  return out;
}

Signature signature_from_json(const json& j) {
  if (!j.is_object() || !j.contains("relations"))
    throw Error("io: signature must be an object with a relations list");
  Signature sig;
  for (const auto& r : j.at("relations"))
    sig.relations.push_back({r.at("name").get<std::string>(), r.at("arity").get<int>()});
  sig.distinguished = j.value("distinguished", std::string("R"));
  if (j.contains("constants"))
    sig.constants = j.at("constants").get<std::vector<std::string>>();
  if (j.contains("functions"))
    for (const auto& f : j.at("functions"))
      sig.functions.push_back({f.at("name").get<std::string>(), f.at("arity").get<int>()});
  return sig;
}

TupleSet tuples_from_json(const json& j) {
  TupleSet out;
  for (const auto& t : j) out.push_back(t.get<Tuple>());
  return out;
}

json tuples_to_json(const TupleSet& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(t);
  return out;
}

}  // namespace

json to_json(const FinStructure& s) {
  json interp = json::object();
  for (const auto& [name, ts] : s.interp) interp[name] = tuples_to_json(ts);
  return {{"signature", signature_to_json(s.sig)},
          {"size", s.size},
          {"interp", interp}};
}

json to_json(const PartialStructure& p) {
  json out = to_json(p.base);
  if (!p.constant_values.empty()) out["constants"] = p.constant_values;
  if (!p.function_tables.empty()) {
    json fns = json::object();
    for (const auto& [name, table] : p.function_tables)
      fns[name] = tuples_to_json(table);
    out["functions"] = fns;
  }
  return out;
}

PartialStructure partial_from_json(const json& j) try {
  if (!j.is_object()) throw Error("io: structure must be a JSON object");
  if (!j.contains("signature"))
    throw Error("io: structure needs a signature object");
  PartialStructure p;
  p.base.sig = signature_from_json(j.at("signature"));
  if (!j.contains("size") || !j.at("size").is_number_integer())
    throw Error("io: structure needs an integer size");
  p.base.size = j.at("size").get<int>();
  if (j.contains("interp")) {
    if (!j.at("interp").is_object()) throw Error("io: interp must be an object");
    for (const auto& [name, ts] : j.at("interp").items())
      p.base.interp[name] = normalize_tuples(tuples_from_json(ts));
  }
  if (j.contains("constants"))
    for (const auto& [name, v] : j.at("constants").items())
      p.constant_values[name] = v.get<int>();
  if (j.contains("functions"))
    for (const auto& [name, table] : j.at("functions").items())
      p.function_tables[name] = normalize_tuples(tuples_from_json(table));
  return p;
} catch (const json::exception& e) {
  throw Error(std::string("io: malformed structure: ") + e.what());
}

FinStructure structure_from_json(const json& j) {
  PartialStructure p = partial_from_json(j);
  if (!p.constant_values.empty() || !p.function_tables.empty() ||
      !p.base.sig.constants.empty() || !p.base.sig.functions.empty())
    throw Error("io: expected a plain relational structure; run relationalize first");
  return p.base;
}

json to_json(const Witness& w) {
  json structures = json::array();
  for (const auto& s : w.structures) structures.push_back(to_json(s));

  auto index_of = [&](const FinStructure& s) {
    for (size_t i = 0; i < w.structures.size(); ++i)
      if (w.structures[i] == s) return (int)i;
    return -1;
  };
  json morphisms = json::array();
  for (const auto& [role, m] : w.morphisms) {
    json entry = {{"role", role}, {"map", m.map()}};
    int src = index_of(m.source());
    int tgt = index_of(m.target());
    if (src >= 0) entry["source"] = src;
    else entry["source_structure"] = to_json(m.source());
    if (tgt >= 0) entry["target"] = tgt;
    else entry["target_structure"] = to_json(m.target());
    morphisms.push_back(entry);
  }
  return {{"kind", w.kind},
          {"indices", w.indices},
          {"structures", structures},
          {"morphisms", morphisms}};
}

json to_json(const PropertyReport& r) {
  json bounds = json::object();
  for (const auto& [name, v] : r.bounds) bounds[name] = v;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  json failures = json::array();
  for (const auto& w : r.failures) failures.push_back(to_json(w));
  json out = {{"property", r.property},
              {"bounds", bounds},
              {"verified", r.verified},
              {"status", r.status()},
              {"witnesses", witnesses},
              {"failures", failures}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json to_json(const PropertyCertificate& c) {
  json out = {{"relation", c.relation},
              {"property", c.property},
              {"depth", c.depth},
              {"certified", c.certified},
              {"claim", c.claim}};
  if (!c.certified) out["failing_level"] = c.failing_level;
  return out;
}

json to_json(const QuotientGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"level", g.level},
          {"vertices", g.vertices},
          {"edges", edges},
          {"loops", g.loops}};
}

json violations_to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"kind", v.kind}, {"detail", v.detail}});
  return out;
}

FundamentalSequence sequence_from_json(const json& j) try {
  if (!j.is_object()) throw Error("io: sequence spec must be a JSON object");
  if (j.contains("family")) {
    std::string name = j.at("family").get<std::string>();
    if (name == "arc") return arc_sequence();
    if (name == "singleton") return singleton_sequence();
    if (name == "cantor")
      return cantor_sequence(dyadic_glue(j.value("depth", 3)));
    throw Error("io: unknown sequence family " + name);
  }
  auto fold = [](const json& parts, auto combine, const char* what) {
    if (!parts.is_array() || parts.size() < 2)
      throw Error(std::string("io: ") + what + " needs at least two parts");
    FundamentalSequence acc = sequence_from_json(parts.at(0));
    for (size_t i = 1; i < parts.size(); ++i)
      acc = combine(acc, sequence_from_json(parts.at(i)));
    return acc;
  };
  if (j.contains("sum"))
    return fold(j.at("sum"),
                [](const auto& a, const auto& b) { return oplus_family(a, b); },
                "sum");
  if (j.contains("product"))
    return fold(j.at("product"),
                [](const auto& a, const auto& b) { return otimes_family(a, b); },
                "product");
  if (j.contains("glue")) {
    const json& g = j.at("glue");
    GlueSpec spec;
    for (const auto& part : g.at("components"))
      spec.components.push_back(sequence_from_json(part));
    for (const auto& pair : g.at("identify")) {
      if (!pair.is_array() || pair.size() != 2)
        throw Error("io: identify entries are pairs of [component, anchor]");
      auto ref = [](const json& r) {
        return AnchorRef{r.at(0).get<int>(), r.at(1).get<std::string>()};
      };
      spec.identified.push_back({ref(pair.at(0)), ref(pair.at(1))});
    }
    return identify(spec);
  }
  if (j.contains("graph")) {
    const json& g = j.at("graph");
    GraphInput in;
    in.vertices = g.at("vertices").get<int>();
    for (const auto& e : g.at("edges"))
      in.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return graph_family(in);
  }
  throw Error("io: sequence spec needs family, sum, product, glue or graph");
} catch (const json::exception& e) {
  throw Error(std::string("io: malformed sequence spec: ") + e.what());
}

FamilyEnumerator family_from_json(const json& j) try {
  if (!j.is_object()) throw Error("io: family spec must be a JSON object");
  if (j.contains("family")) {
    std::string name = j.at("family").get<std::string>();
    if (name == "chain") return chain_family();
    if (name == "singleton") return singleton_family();
    if (name == "cantor") return cantor_family(dyadic_glue(j.value("depth", 3)));
    throw Error("io: unknown family " + name);
  }
  if (j.contains("members")) {
    std::vector<FinStructure> members;
    for (const auto& m : j.at("members"))
      members.push_back(structure_from_json(m));
    return explicit_family(j.value("name", std::string("explicit")), members);
  }
  throw Error("io: family spec needs family or members");
} catch (const json::exception& e) {
  throw Error(std::string("io: malformed family spec: ") + e.what());
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error("io: " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io: cannot write " + path);
  out << text;
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fraisse::io
