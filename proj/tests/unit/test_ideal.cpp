#include <doctest.h>

#include "exbetti/error.hpp"
#include "exbetti/ideal.hpp"
#include "support.hpp"

using namespace exbetti;
using support::ideal;
using support::mono;
using support::monos;

TEST_SUITE("ideal") {
  TEST_CASE("minimalize") {
    CHECK(ideal(2, {"x1^2", "x1^2*x2", "x2^3"}).generators() == monos(2, {"x1^2", "x2^3"}));
    CHECK(ideal(2, {"x1"}).generators() == monos(2, {"x1"}));
    CHECK(ideal(3, {"x1*x2", "x2*x3", "x1*x2*x3"}).generators() == monos(3, {"x1*x2", "x2*x3"}));
    CHECK(ideal(3, {"x2*x3", "x1*x2", "x1*x2"}) == ideal(3, {"x1*x2", "x2*x3"}));
  }

  TEST_CASE("membership") {
    CHECK(ideal(3, {"x1^2", "x1*x2"}).contains(mono("x1^2*x3", 3)));
    CHECK_FALSE(ideal(3, {"x1^2"}).contains(mono("x1", 3)));
    CHECK(ideal(3, {"x1*x2^2"}).contains(mono("x1*x2^2", 3)));
  }

  TEST_CASE("graded slices") {
    CHECK(ideal(2, {"x1"}).graded_slice(2) == monos(2, {"x1^2", "x1*x2"}));
    CHECK(ideal(6, {"x1^2", "x1*x2", "x1*x3"}).graded_slice(2) == monos(6, {"x1^2", "x1*x2", "x1*x3"}));
    CHECK(ideal(3, {"x2^3"}).graded_slice(4) == monos(3, {"x1*x2^3", "x2^4", "x2^3*x3"}));
  }

  TEST_CASE("initial degree") {
    CHECK(ideal(2, {"x1^2", "x2^3"}).initial_degree() == 2);
    CHECK(ideal(2, {"x1"}).initial_degree() == 1);
    auto i1 = ideal_from_json(support::load_fixture("col1_ideal.json"));
    CHECK(i1.initial_degree() == 2);
    try {
      MonomialIdeal(3).initial_degree();
      FAIL("expected EmptyIdeal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyIdeal);
    }
  }

  TEST_CASE("strong stability") {
    CHECK(is_strongly_stable(ideal_from_json(support::load_fixture("col1_ideal.json"))));
    CHECK(is_strongly_stable(ideal(2, {"x1"})));
    auto x2sq = ideal(2, {"x2^2"});
    CHECK_FALSE(is_strongly_stable(x2sq));
    auto v = first_strong_violation(x2sq);
    REQUIRE(v);
    CHECK(v->generator == mono("x2^2", 2));
    CHECK(v->i == 2);
    CHECK(v->j == 1);
    CHECK(v->image == mono("x1*x2", 2));
  }

  TEST_CASE("stable but not strongly stable") {
    auto i = ideal(3, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3"});
    CHECK(is_strongly_stable(i));
    auto j = ideal(3, {"x1", "x2^2", "x2*x3^2"});
    CHECK(is_stable(j));
    CHECK(is_strongly_stable(j));
    auto k = ideal(3, {"x1^2", "x1*x2", "x2^2", "x2*x3"});
    CHECK(is_stable(k));
    CHECK_FALSE(is_strongly_stable(k));
  }

  TEST_CASE("borel closure") {
    CHECK(borel_closure(2, monos(2, {"x2^2"})) == ideal(2, {"x1^2", "x1*x2", "x2^2"}));
    CHECK(borel_closure(2, monos(2, {"x1"})) == ideal(2, {"x1"}));
    CHECK(borel_closure(3, monos(3, {"x2*x3"})) == ideal(3, {"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3"}));
  }

  TEST_CASE("closure is the smallest strongly stable superset") {
    for (const auto& u : enumerate_degree(3, 3)) {
      auto c = borel_closure(3, {u});
      CHECK(is_strongly_stable(c));
      CHECK(c.contains(u));
      for (const auto& g : c.generators()) {
        // every generator is reachable from u by moves, so it is >=lex u
        CHECK(lex_compare(g, u) != LexOrder::Less);
      }
    }
  }

  TEST_CASE("submodule invariants") {
    std::vector<MonomialIdeal> comps{ideal(3, {"x1"}), ideal(3, {"x1^2"})};
    CHECK_NOTHROW(MonomialSubmodule(3, comps, {0, 1}));
    CHECK_THROWS_AS(MonomialSubmodule(3, comps, {1, 0}), Error);
    CHECK_THROWS_AS(MonomialSubmodule(3, comps, {0}), Error);
    CHECK_THROWS_AS(MonomialSubmodule(4, comps), Error);
    CHECK(MonomialSubmodule(3, comps).shifts() == std::vector<int>{0, 0});
  }

  TEST_CASE("json round trip") {
    auto doc = support::load_fixture("rank4_module.json");
    auto m = module_from_json(doc);
    CHECK(m.rank() == 4);
    CHECK(dump_json(to_json(m)) == dump_json(to_json(module_from_json(to_json(m)))));
    auto i = ideal_from_json(support::load_fixture("col2_ideal.json"));
    CHECK(ideal_from_json(parse_json(dump_json(to_json(i)))) == i);
    CHECK_THROWS_AS(ideal_from_json(parse_json("{\"generators\": []}")), Error);
    CHECK_THROWS_AS(parse_json("{"), Error);
  }
}
