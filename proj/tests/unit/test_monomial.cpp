#include <doctest.h>

#include "exbetti/arith.hpp"
#include "exbetti/error.hpp"
#include "support.hpp"

using namespace exbetti;
using support::mono;

TEST_SUITE("monomial") {
  TEST_CASE("max index") {
    CHECK(mono("x1*x6", 6).max_index() == 6);
    CHECK(Monomial(6).max_index() == 0);
    CHECK(mono("x2^2*x4", 6).max_index() == 4);
  }

  TEST_CASE("lex comparison") {
    CHECK(lex_compare(mono("x2^3*x3^2", 6), mono("x2*x4^2*x6^2", 6)) == LexOrder::Greater);
    auto u = mono("x2*x5^3", 6);
    CHECK(lex_compare(u, u) == LexOrder::Equal);
    CHECK(lex_compare(mono("x3^5", 6), mono("x2*x6^4", 6)) == LexOrder::Less);
    CHECK_THROWS_AS(lex_compare(mono("x1", 2), mono("x1^2", 2)), Error);
  }

  TEST_CASE("borel moves") {
    CHECK(borel_move(mono("x2*x4^2", 6), 4, 1) == mono("x1*x2*x4", 6));
    CHECK(borel_move(mono("x3^5", 6), 3, 2) == mono("x2*x3^4", 6));
    try {
      borel_move(mono("x1^2", 6), 2, 1);
      FAIL("expected InvalidMove");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidMove);
    }
    CHECK_THROWS_AS(borel_move(mono("x2", 3), 2, 3), Error);
  }

  TEST_CASE("enumerate degree") {
    CHECK(enumerate_degree(2, 2) == support::monos(2, {"x1^2", "x1*x2", "x2^2"}));
    CHECK(enumerate_degree(3, 1) == support::monos(3, {"x1", "x2", "x3"}));
    auto all = enumerate_degree(6, 5);
    REQUIRE(all.size() == 252);
    CHECK(all.front() == mono("x1^5", 6));
    CHECK(all.back() == mono("x6^5", 6));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(lex_compare(all[i - 1], all[i]) == LexOrder::Greater);
  }

  TEST_CASE("enumeration counts follow stars and bars") {
    for (int n = 1; n <= 5; ++n) {
      for (int d = 0; d <= 5; ++d) {
        CHECK(enumerate_degree(n, d).size() == binomial(n + d - 1, d));
      }
    }
  }

  TEST_CASE("parse and print round trip") {
    for (const auto& u : enumerate_degree(4, 3)) CHECK(parse_monomial(u.to_string(), 4) == u);
    CHECK(parse_monomial(" x1 ^2 * x3 ", 3) == Monomial({2, 0, 1}));
    CHECK(parse_monomial("1", 3).is_one());
    CHECK_THROWS_AS(parse_monomial("x4", 3), Error);
    CHECK_THROWS_AS(parse_monomial("x1^", 3), Error);
    CHECK_THROWS_AS(parse_monomial("y1", 3), Error);
    CHECK_THROWS_AS(parse_monomial("", 3), Error);
  }

  TEST_CASE("checked arithmetic") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_THROWS_AS(checked_mul(Count{1} << 40, Count{1} << 40), Error);
  }
}
