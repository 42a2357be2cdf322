#include "doctest.h"

#include "fraisse/epi.hpp"
#include "fraisse/families.hpp"

using namespace fraisse;

TEST_CASE("arc levels are doubling chains") {
  CHECK(arc_level(0) == chain(2));
  CHECK(arc_level(1) == chain(3));
  CHECK(arc_level(3).size == 9);
  CHECK(is_chain(arc_level(4)));
  CHECK(!is_chain(cantor_level(dyadic_glue(1), 1)));
}

TEST_CASE("arc bonds halve and compose") {
  Morphism b1 = arc_bond(1);
  CHECK(b1.source() == chain(5));
  CHECK(b1.target() == chain(3));
  CHECK(b1.map() == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(is_epimorphism(b1));

  FundamentalSequence arc = arc_sequence();
  CHECK(arc.level(2) == chain(5));
  CHECK(arc.bond_compose(0, 2).map() == std::vector<int>{0, 0, 0, 0, 1});
  CHECK(arc.bond_compose(2, 2).map() == std::vector<int>{0, 1, 2, 3, 4});
  for (int n = 0; n <= 8; ++n) CHECK(is_epimorphism(arc.bond(n)));
}

TEST_CASE("chain amalgamation matches the fiber-sum construction") {
  SUBCASE("constant maps onto a point") {
    Morphism phi(chain(2), chain(1), {0, 0});
    Morphism psi(chain(3), chain(1), {0, 0, 0});
    Amalgam am = arc_amalgamate(phi, psi);
    CHECK(am.d == chain(3));
    CHECK(am.theta.map() == std::vector<int>{0, 1, 1});
    CHECK(am.rho.map() == std::vector<int>{0, 1, 2});
    CHECK(compose(am.theta, phi) == compose(am.rho, psi));
  }
  SUBCASE("crossing fibers over Chain(2)") {
    Morphism phi(chain(3), chain(2), {0, 0, 1});
    Morphism psi(chain(3), chain(2), {0, 1, 1});
    Amalgam am = arc_amalgamate(phi, psi);
    CHECK(am.d == chain(4));
    CHECK(am.theta.map() == std::vector<int>{0, 1, 2, 2});
    CHECK(am.rho.map() == std::vector<int>{0, 0, 1, 2});
    CHECK(compose(am.theta, phi).map() == std::vector<int>{0, 0, 1, 1});
    CHECK(compose(am.theta, phi) == compose(am.rho, psi));
  }
  SUBCASE("identities amalgamate trivially") {
    Morphism id = identity_morphism(chain(2));
    Amalgam am = arc_amalgamate(id, id);
    CHECK(am.d == chain(2));
    CHECK(am.theta.map() == std::vector<int>{0, 1});
    CHECK(am.rho.map() == std::vector<int>{0, 1});
  }
  SUBCASE("every output is a commuting pair of epimorphisms") {
    for (int a = 1; a <= 3; ++a)
      for (int b = a; b <= 4; ++b)
        for (int c = a; c <= 4; ++c)
          for (const auto& phi : enumerate_epimorphisms(chain(b), chain(a)))
            for (const auto& psi : enumerate_epimorphisms(chain(c), chain(a))) {
              Amalgam am = arc_amalgamate(phi, psi);
              CHECK(is_epimorphism(am.theta));
              CHECK(is_epimorphism(am.rho));
              CHECK(compose(am.theta, phi) == compose(am.rho, psi));
            }
  }
  SUBCASE("rejects non-epimorphisms and mismatched targets") {
    Morphism not_epi(chain(2), chain(2), {0, 0});
    CHECK_THROWS_AS(arc_amalgamate(not_epi, identity_morphism(chain(2))), Error);
    Morphism onto2(chain(3), chain(2), {0, 0, 1});
    Morphism onto1(chain(3), chain(1), {0, 0, 0});
    CHECK_THROWS_AS(arc_amalgamate(onto2, onto1), Error);
  }
}

TEST_CASE("dyadic levels glue adjacent words") {
  GlueSystem g = dyadic_glue(3);
  FinStructure d1 = cantor_level(g, 1);
  CHECK(d1.size == 2);
  CHECK(d1.distinguished_rel() == TupleSet{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  FinStructure d2 = cantor_level(g, 2);
  CHECK(d2.size == 4);
  // beyond the diagonal: 00-01, 01-10, 10-11
  CHECK(d2.distinguished_rel() ==
        TupleSet{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2},
                 {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
  CHECK(d2.rel("rho_0") == TupleSet{{0}, {1}});
  CHECK(d2.rel("rho_1") == TupleSet{{2}, {3}});
  CHECK(d2.rel("rho_01") == TupleSet{{1}});
  CHECK(d2.rel("rho_") == TupleSet{{0}, {1}, {2}, {3}});

  CHECK_THROWS_AS(cantor_level(g, 4), Error);
}

TEST_CASE("dyadic bonds are prefix restrictions") {
  GlueSystem g = dyadic_glue(8);
  CHECK(cantor_bond(g, 1).map() == std::vector<int>{0, 0, 1, 1});
  FundamentalSequence seq = cantor_sequence(g);
  CHECK(seq.max_level() == 8);
  for (int n = 0; n <= 7; ++n) {
    Morphism b = seq.bond(n);
    CHECK(is_epimorphism(b));
    for (int w = 0; w < b.source().size; ++w) CHECK(b.map()[w] == w / 2);
  }
  CHECK_THROWS_AS(seq.level(9), Error);
}

TEST_CASE("glue system validation accepts the dyadic system") {
  CHECK(validate_glue_levels(dyadic_glue(4), 4).empty());
}

TEST_CASE("glue system validation flags broken relations") {
  GlueSystem bad;
  bad.name = "asymmetric";
  bad.truncation_depth = 2;
  bad.related = [](std::string_view u, std::string_view v) {
    return u == v || (u < v && v.find('1') != std::string_view::npos);
  };
  auto report = validate_glue_levels(bad, 2);
  CHECK(!report.empty());
  bool symmetric_issue = false;
  for (const auto& v : report) symmetric_issue |= v.kind == "symmetric";
  CHECK(symmetric_issue);
}

TEST_CASE("family enumerators produce the advertised members") {
  auto chains = chain_family();
  auto members = chains.members_up_to(3);
  REQUIRE(members.size() == 3);
  CHECK(members[0] == chain(1));
  CHECK(members[2] == chain(3));

  auto singleton = singleton_family();
  auto single = singleton.members_up_to(10);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == chain(1));
  CHECK(validate(single[0]).empty());

  auto cantor = cantor_family(dyadic_glue(3));
  CHECK(cantor.members_up_to(8).size() == 4);  // sizes 1, 2, 4, 8
  CHECK(cantor.members_up_to(3).size() == 2);
}

TEST_CASE("explicit families reject mixed signatures") {
  CHECK_THROWS_AS(explicit_family("mixed", {chain(2), cantor_level(dyadic_glue(1), 1)}),
                  Error);
  auto fam = explicit_family("chains", {chain(1), chain(2)});
  CHECK(fam.members_up_to(5).size() == 2);
}

TEST_CASE("singleton sequence is constant") {
  FundamentalSequence s = singleton_sequence();
  CHECK(s.level(3) == chain(1));
  CHECK(s.bond(2).map() == std::vector<int>{0});
}
