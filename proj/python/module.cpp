#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fraisse/epi.hpp"
#include "fraisse/families.hpp"
#include "fraisse/family_checks.hpp"
#include "fraisse/io.hpp"
#include "fraisse/limits.hpp"

namespace py = pybind11;
using namespace fraisse;

namespace {

// Structures, sequence specs and reports cross the boundary as JSON text;
// the Python package parses them into plain dicts.
FinStructure parse(const std::string& text) {
  return io::structure_from_json(io::json::parse(text));
}

FundamentalSequence seq_of(const std::string& text) {
  return io::sequence_from_json(io::json::parse(text));
}

std::string dump(const io::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite structures, epimorphisms and projective Fraisse checks";

  m.def("chain", [](int k) { return dump(io::to_json(chain(k))); });
  m.def("arc_level", [](int n) { return dump(io::to_json(arc_level(n))); });
  m.def("cantor_level", [](int depth, int n) {
    return dump(io::to_json(cantor_level(dyadic_glue(depth), n)));
  });
  m.def("level", [](const std::string& spec, int n) {
    return dump(io::to_json(seq_of(spec).level(n)));
  });

  m.def("validate", [](const std::string& s) {
    return dump(io::violations_to_json(
        validate(io::partial_from_json(io::json::parse(s)))));
  });
  m.def("relationalize", [](const std::string& s) {
    return dump(io::to_json(
        relationalize(io::partial_from_json(io::json::parse(s)))));
  });

  m.def("epimorphisms", [](const std::string& a, const std::string& b) {
    std::vector<std::vector<int>> maps;
    for (const auto& e : enumerate_epimorphisms(parse(a), parse(b)))
      maps.push_back(e.map());
    return maps;
  });
  m.def("is_epimorphism",
        [](const std::string& a, const std::string& b, std::vector<int> map) {
          return is_epimorphism(Morphism(parse(a), parse(b), std::move(map)));
        });
  m.def("amalgamate", [](const std::string& b, const std::string& a,
                         std::vector<int> phi, const std::string& c,
                         std::vector<int> psi) {
    Amalgam am = arc_amalgamate(Morphism(parse(b), parse(a), std::move(phi)),
                                Morphism(parse(c), parse(a), std::move(psi)));
    return py::make_tuple(dump(io::to_json(am.d)), am.theta.map(), am.rho.map());
  });

  m.def("check_jpp", [](const std::string& fam, int pair_bound, int search_bound) {
    return dump(io::to_json(check_jpp(io::family_from_json(io::json::parse(fam)),
                                      pair_bound, search_bound)));
  });
  m.def("check_ap", [](const std::string& fam, int size_bound, int search_bound) {
    return dump(io::to_json(check_ap(io::family_from_json(io::json::parse(fam)),
                                     size_bound, search_bound)));
  });
  m.def("check_fundseq", [](const std::string& seq, const std::string& fam,
                            int depth, int member_bound, int factor_depth) {
    return dump(io::to_json(check_fundamental_sequence(
        seq_of(seq), io::family_from_json(io::json::parse(fam)), depth,
        member_bound, factor_depth)));
  });
  m.def("check_rigidity", [](const std::string& seq, int depth) {
    return dump(io::to_json(check_rigidity(seq_of(seq), depth)));
  });

  m.def("certify", [](const std::string& seq, const std::string& rel,
                      const std::string& property, int depth) {
    return dump(io::to_json(
        certify(seq_of(seq), rel, parse_level_property(property), depth)));
  });
  m.def("quotient", [](const std::string& seq, int level, const std::string& fmt) {
    GraphFormat f = fmt == "dot" ? GraphFormat::dot : GraphFormat::json;
    return export_graph(quotient_graph(seq_of(seq), level), f);
  });
}
