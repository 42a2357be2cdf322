#include "doctest.h"

#include "fraisse/epi.hpp"
#include "fraisse/families.hpp"
#include "fraisse/oracles.hpp"

using namespace fraisse;

namespace {

std::vector<std::vector<int>> maps_of(const std::vector<Morphism>& ms) {
  std::vector<std::vector<int>> out;
  for (const auto& m : ms) out.push_back(m.map());
  return out;
}

// Path with R only: drops le so the flip becomes an automorphism.
FinStructure r_only_chain(int k) {
  FinStructure c = chain(k);
  FinStructure s;
  s.sig.relations = {{"R", 2}};
  s.sig.distinguished = "R";
  s.size = k;
  s.interp["R"] = c.rel("R");
  return s;
}

}  // namespace

TEST_CASE("morphism construction checks its arguments") {
  CHECK_THROWS_AS(Morphism(chain(2), chain(2), {0}), Error);
  CHECK_THROWS_AS(Morphism(chain(2), chain(2), {0, 5}), Error);
  CHECK_THROWS_AS(Morphism(chain(2), r_only_chain(2), {0, 1}), Error);
  Morphism ok(chain(2), chain(2), {0, 1});
  CHECK(ok(1) == 1);
}

TEST_CASE("epimorphism definition on small chains") {
  CHECK(is_epimorphism(Morphism(chain(3), chain(2), {0, 0, 1})));
  CHECK(!is_epimorphism(Morphism(chain(3), chain(2), {0, 1, 0})));
  CHECK(is_epimorphism(identity_morphism(chain(2))));
  // surjective but order-breaking
  CHECK(!is_epimorphism(Morphism(chain(2), chain(2), {1, 0})));
}

TEST_CASE("enumeration is exact and lexicographic") {
  CHECK(maps_of(enumerate_epimorphisms(chain(3), chain(2))) ==
        std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 1}});
  CHECK(enumerate_epimorphisms(chain(2), chain(3)).empty());
  for (int n = 1; n <= 5; ++n) {
    auto onto_point = enumerate_epimorphisms(chain(n), chain(1));
    REQUIRE(onto_point.size() == 1);
    CHECK(onto_point.front().map() == std::vector<int>(n, 0));
  }
}

TEST_CASE("enumeration agrees with the all-maps filter") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      CHECK(maps_of(enumerate_epimorphisms(chain(m), chain(n))) ==
            oracles::epimorphisms_by_filter(chain(m), chain(n)));
  for (int k = 0; k < 25; ++k) {
    FinStructure a = oracles::random_structure(10 + k, 1 + k % 4, 50);
    FinStructure b = oracles::random_structure(300 + k, 1 + k % 3, 50);
    CHECK(maps_of(enumerate_epimorphisms(a, b)) ==
          oracles::epimorphisms_by_filter(a, b));
  }
}

TEST_CASE("max_results and allowed candidate lists restrict the search") {
  EnumOptions one;
  one.max_results = 1;
  auto first = enumerate_epimorphisms(chain(4), chain(2), one);
  REQUIRE(first.size() == 1);
  CHECK(first.front().map() == std::vector<int>{0, 0, 0, 1});

  EnumOptions pinned;
  pinned.allowed = {{0}, {1}, {1}};  // forces [0,1,1]
  auto forced = enumerate_epimorphisms(chain(3), chain(2), pinned);
  REQUIRE(forced.size() == 1);
  CHECK(forced.front().map() == std::vector<int>{0, 1, 1});
}

TEST_CASE("composition of epimorphisms") {
  Morphism f(chain(4), chain(3), {0, 1, 2, 2});
  Morphism g(chain(3), chain(2), {0, 0, 1});
  Morphism h = compose(f, g);
  CHECK(h.map() == std::vector<int>{0, 0, 1, 1});
  CHECK(is_epimorphism(h));
  CHECK(compose(f, identity_morphism(chain(3))) == f);
  CHECK_THROWS_AS(compose(g, f), Error);

  // closure under composition, exhaustively on small chains
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= m; ++k)
      for (int j = 1; j <= k; ++j)
        for (const auto& a : enumerate_epimorphisms(chain(m), chain(k)))
          for (const auto& b : enumerate_epimorphisms(chain(k), chain(j)))
            CHECK(is_epimorphism(compose(a, b)));
}

TEST_CASE("isomorphisms and automorphisms") {
  CHECK(is_isomorphism(identity_morphism(chain(3))));
  CHECK(!is_isomorphism(Morphism(chain(3), chain(2), {0, 0, 1})));

  auto chain_autos = enumerate_automorphisms(chain(3));
  REQUIRE(chain_autos.size() == 1);
  CHECK(chain_autos.front().map() == std::vector<int>{0, 1, 2});

  // without the order the path flip survives
  auto path_autos = enumerate_automorphisms(r_only_chain(3));
  CHECK(maps_of(path_autos) ==
        std::vector<std::vector<int>>{{0, 1, 2}, {2, 1, 0}});
}

TEST_CASE("orbit-reduced enumeration keeps one representative per orbit") {
  EnumOptions orbit;
  orbit.up_to_target_automorphisms = true;
  auto all = enumerate_epimorphisms(r_only_chain(3), r_only_chain(2));
  auto reduced = enumerate_epimorphisms(r_only_chain(3), r_only_chain(2), orbit);
  CHECK(all.size() == 2 * reduced.size());  // target flip pairs them up
  for (const auto& m : reduced) CHECK(is_epimorphism(m));
}

TEST_CASE("uniqueness classification") {
  auto multiple = unique_epimorphism(chain(3), chain(2));
  CHECK(multiple.kind == EpiClassification::Kind::multiple);
  CHECK(multiple.count == 2);

  auto unique = unique_epimorphism(chain(2), chain(2));
  REQUIRE(unique.kind == EpiClassification::Kind::unique);
  CHECK(unique.witness->map() == std::vector<int>{0, 1});

  auto none = unique_epimorphism(chain(2), chain(3));
  CHECK(none.kind == EpiClassification::Kind::none);
  CHECK(none.count == 0);

  GlueSystem g = dyadic_glue(2);
  auto restriction = unique_epimorphism(cantor_level(g, 2), cantor_level(g, 1));
  REQUIRE(restriction.kind == EpiClassification::Kind::unique);
  CHECK(restriction.witness->map() == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("fiber refinement against partitions") {
  Morphism m(chain(3), chain(2), {0, 0, 1});
  CHECK(refines(m, {{0, 1}, {2}}));
  CHECK(!refines(m, {{0}, {1, 2}}));
  CHECK(refines(identity_morphism(chain(3)), {{0}, {1}, {2}}));
  CHECK_THROWS_AS(refines(m, {{0, 1}}), Error);            // not a cover
  CHECK_THROWS_AS(refines(m, {{0, 1}, {1, 2}}), Error);    // overlap
  CHECK_THROWS_AS(refines(m, {{0, 1}, {2, 9}}), Error);    // out of range
}

TEST_CASE("chain epimorphism counts follow the binomial recurrence") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= m; ++n)
      CHECK(enumerate_epimorphisms(chain(m), chain(n)).size() ==
            oracles::monotone_surjection_count(m, n));
  CHECK(oracles::monotone_surjection_count(6, 3) == 10);  // C(5,2)
  CHECK(oracles::monotone_surjection_count(2, 3) == 0);
}
