#include "doctest.h"

#include "fraisse/constructions.hpp"
#include "fraisse/epi.hpp"
#include "fraisse/families.hpp"
#include "fraisse/limits.hpp"
#include "fraisse/oracles.hpp"

using namespace fraisse;

namespace {

oracles::SimpleGraph as_graph(const QuotientGraph& q) {
  oracles::SimpleGraph g;
  g.vertices = q.vertices;
  g.edges = q.edges;
  return g;
}

}  // namespace

TEST_CASE("sums tag blocks and keep shared symbols blockwise") {
  SumStructure s = oplus(chain(2), chain(3));
  CHECK(s.structure.size == 5);
  CHECK(s.offsets == std::vector<int>{0, 2});
  CHECK(s.block_symbols == std::vector<std::string>{"P1", "P2"});
  CHECK(s.structure.rel("P1") == TupleSet{{0}, {1}});
  CHECK(s.structure.rel("P2") == TupleSet{{2}, {3}, {4}});
  CHECK(s.structure.sig.distinguished == "R");
  // no cross-block tuples
  for (const auto& t : s.structure.rel("R"))
    CHECK((t[0] < 2) == (t[1] < 2));
  CHECK(tuple_set_contains(s.structure.rel("le"), {2, 4}));
  CHECK(!tuple_set_contains(s.structure.rel("le"), {1, 2}));
  CHECK(validate(s.structure).empty());
}

TEST_CASE("sum rejects arity clashes and mixed distinguished symbols") {
  Signature sig_u1;
  sig_u1.relations = {{"R", 2}, {"u", 1}};
  Signature sig_u2;
  sig_u2.relations = {{"R", 2}, {"u", 2}};
  FinStructure a = make_structure(sig_u1, 1, {{"R", {{0, 0}}}, {"u", {{0}}}});
  FinStructure b = make_structure(sig_u2, 1, {{"R", {{0, 0}}}, {"u", {{0, 0}}}});
  CHECK_THROWS_AS(oplus(a, b), Error);

  Signature sig_s = sig_u1;
  sig_s.relations[0].name = "S";
  sig_s.distinguished = "S";
  FinStructure c = make_structure(sig_s, 1, {{"S", {{0, 0}}}, {"u", {{0}}}});
  CHECK_THROWS_AS(oplus(a, c), Error);
}

TEST_CASE("block names step aside when P1 is taken") {
  Signature sig;
  sig.relations = {{"R", 2}, {"P1", 1}};
  FinStructure a = make_structure(sig, 1, {{"R", {{0, 0}}}, {"P1", {{0}}}});
  SumStructure s = oplus(a, a);
  CHECK(s.block_symbols == std::vector<std::string>{"P1'", "P2"});
  CHECK(validate(s.structure).empty());
}

TEST_CASE("sum epimorphisms decompose and recompose") {
  Morphism f1(chain(3), chain(2), {0, 0, 1});
  Morphism f2(chain(2), chain(2), {0, 1});
  Morphism f = oplus_epi(f1, f2);
  CHECK(is_epimorphism(f));
  CHECK(f.map() == std::vector<int>{0, 0, 1, 2, 3});

  SumStructure src = oplus(chain(3), chain(2));
  SumStructure tgt = oplus(chain(2), chain(2));
  auto parts = decompose_oplus_epi(f, src, tgt);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == f1);
  CHECK(parts[1] == f2);

  CHECK_THROWS_AS(decompose_oplus_epi(f, tgt, tgt), Error);
  Morphism not_epi(src.structure, tgt.structure, {0, 0, 0, 2, 3});
  CHECK_THROWS_AS(decompose_oplus_epi(not_epi, src, tgt), Error);
}

TEST_CASE("products pair coordinates with projection relations") {
  ProductStructure p = otimes(chain(2), chain(3));
  CHECK(p.structure.size == 6);
  CHECK(p.row_symbol == "r1");
  CHECK(p.col_symbol == "r2");
  CHECK(p.structure.sig.find("le.1"));
  CHECK(p.structure.sig.find("le.2"));
  CHECK(!p.structure.sig.find("le"));
  // element (a,b) is a*3+b; (0,2)=2 and (1,2)=5 share a column
  CHECK(tuple_set_contains(p.structure.rel("r2"), {2, 5}));
  CHECK(!tuple_set_contains(p.structure.rel("r2"), {2, 4}));
  CHECK(tuple_set_contains(p.structure.rel("r1"), {0, 2}));
  // R is conjunctionwise: (0,0)-(1,1) needs 0R1 in both factors
  CHECK(tuple_set_contains(p.structure.rel("R"), {0, 4}));
  CHECK(!tuple_set_contains(p.structure.rel("R"), {0, 5}));
  CHECK(validate(p.structure).empty());
}

TEST_CASE("product epimorphisms factor through the projections") {
  Morphism psi(chain(3), chain(2), {0, 1, 1});
  Morphism theta(chain(2), chain(2), {0, 1});
  Morphism f = otimes_epi(psi, theta);
  CHECK(is_epimorphism(f));

  ProductStructure src = otimes(chain(3), chain(2));
  ProductStructure tgt = otimes(chain(2), chain(2));
  auto [back_psi, back_theta] = factorize_product_epi(f, src, tgt);
  CHECK(back_psi == psi);
  CHECK(back_theta == theta);

  Morphism not_epi(src.structure, tgt.structure, {0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(factorize_product_epi(not_epi, src, tgt), Error);
  CHECK_THROWS_AS(factorize_product_epi(f, tgt, tgt), Error);
}

TEST_CASE("sum sequence doubles the path") {
  FundamentalSequence two = oplus_family(arc_sequence(), arc_sequence());
  CHECK(two.level(1).size == 6);
  CHECK(is_epimorphism(two.bond(0)));
  QuotientGraph q = quotient_graph(two, 1);
  CHECK(q.vertices == 6);
  CHECK(q.edges.size() == 4);  // two disjoint 3-vertex paths
  CHECK(quotient_coherence(two, 0, 2));
}

TEST_CASE("product sequence is the king grid") {
  FundamentalSequence square = otimes_family(arc_sequence(), arc_sequence());
  CHECK(square.level(1).size == 9);
  CHECK(is_epimorphism(square.bond(0)));
  QuotientGraph q = quotient_graph(square, 1);
  CHECK(oracles::isomorphic(as_graph(q), oracles::king_grid(3)));
  CHECK(quotient_coherence(square, 0, 2));
}

TEST_CASE("chain extrema anchors") {
  auto anchors = chain_extrema()(chain(5));
  REQUIRE(anchors.size() == 2);
  CHECK(anchors[0] == std::pair<std::string, int>{"min", 0});
  CHECK(anchors[1] == std::pair<std::string, int>{"max", 4});

  Signature sig;
  sig.relations = {{"R", 2}};
  FinStructure bare = make_structure(sig, 2, {{"R", {{0, 0}, {1, 1}}}});
  CHECK_THROWS_AS(chain_extrema()(bare), Error);
}

TEST_CASE("gluing two arcs end to start yields one long path") {
  GlueSpec spec;
  spec.components = {arc_sequence(), arc_sequence()};
  spec.identified = {{{0, "max"}, {1, "min"}}};
  FundamentalSequence glued = identify(spec);

  FinStructure l0 = glued.level(0);
  CHECK(l0.sig.distinguished == "S");
  CHECK(tuple_set_contains(l0.rel("S"), {1, 2}));
  CHECK(tuple_set_contains(l0.rel("S"), {2, 1}));
  CHECK(!tuple_set_contains(l0.rel("R"), {1, 2}));

  for (int n = 0; n <= 3; ++n) {
    QuotientGraph q = quotient_graph(glued, n);
    int expect = 2 * ((1 << n) + 1) - 1;
    CHECK(q.vertices == expect);
    CHECK(oracles::isomorphic(as_graph(q), oracles::path_graph(expect)));
  }
  CHECK(is_epimorphism(glued.bond(0)));
  CHECK(quotient_coherence(glued, 0, 2));
}

TEST_CASE("gluing the ends of a single arc closes a cycle") {
  GlueSpec spec;
  spec.components = {arc_sequence()};
  spec.identified = {{{0, "min"}, {0, "max"}}};
  FundamentalSequence circle = identify(spec);
  for (int n = 1; n <= 3; ++n) {
    QuotientGraph q = quotient_graph(circle, n);
    CHECK(q.vertices == (1 << n) + 1);  // same-component pair stays two points
    CHECK(oracles::isomorphic(as_graph(q), oracles::cycle_graph((1 << n) + 1)));
  }
}

TEST_CASE("identify validates its inputs") {
  GlueSpec empty;
  CHECK_THROWS_AS(identify(empty), Error);

  GlueSpec bad_ref;
  bad_ref.components = {arc_sequence()};
  bad_ref.identified = {{{0, "max"}, {3, "min"}}};
  CHECK_THROWS_AS(identify(bad_ref), Error);

  GlueSpec bad_anchor;
  bad_anchor.components = {arc_sequence(), arc_sequence()};
  bad_anchor.identified = {{{0, "top"}, {1, "min"}}};
  FundamentalSequence seq = identify(bad_anchor);
  CHECK_THROWS_AS(seq.level(0), Error);  // no anchor named "top"
}

TEST_CASE("unstable anchors are rejected at the bond") {
  GlueSpec spec;
  spec.components = {arc_sequence(), arc_sequence()};
  // element 1 moves under the halving bond, so it cannot anchor a gluing
  spec.anchors = {[](const FinStructure&) {
                    return std::vector<std::pair<std::string, int>>{{"a", 1}};
                  },
                  chain_extrema()};
  spec.identified = {{{0, "a"}, {1, "min"}}};
  FundamentalSequence seq = identify(spec);
  CHECK_NOTHROW(seq.level(1));
  CHECK_THROWS_AS(seq.bond(0), Error);
}

TEST_CASE("graph families subdivide their input graph") {
  FundamentalSequence tri = graph_family({3, {{0, 1}, {1, 2}, {0, 2}}});
  QuotientGraph q = quotient_graph(tri, 1);
  CHECK(q.vertices == 6);
  CHECK(oracles::isomorphic(as_graph(q), oracles::cycle_graph(6)));
  CHECK(quotient_coherence(tri, 0, 2));

  FundamentalSequence theta = graph_family({2, {{0, 1}, {0, 1}, {0, 1}}});
  QuotientGraph t1 = quotient_graph(theta, 1);
  CHECK(oracles::isomorphic(as_graph(t1),
                            oracles::subdivision(2, {{0, 1}, {0, 1}, {0, 1}}, 2)));
}

TEST_CASE("a loop edge becomes a cycle through its vertex") {
  FundamentalSequence loop = graph_family({1, {{0, 0}}});
  QuotientGraph q = quotient_graph(loop, 2);
  CHECK(oracles::isomorphic(as_graph(q), oracles::cycle_graph(5)));
}

TEST_CASE("graph input is validated") {
  CHECK_THROWS_AS(graph_family({0, {}}), Error);
  CHECK_THROWS_AS(graph_family({2, {}}), Error);
  CHECK_THROWS_AS(graph_family({2, {{0, 5}}}), Error);
}

TEST_CASE("sum and product bonds survive composed coherence checks") {
  FundamentalSequence mix =
      oplus_family(arc_sequence(), otimes_family(arc_sequence(), arc_sequence()));
  CHECK(is_epimorphism(mix.bond(1)));
  CHECK(quotient_coherence(mix, 0, 2));
}
