#include <doctest.h>

#include <algorithm>
#include <set>

#include "exbetti/arith.hpp"
#include "exbetti/error.hpp"
#include "exbetti/segment.hpp"
#include "support.hpp"

using namespace exbetti;
using support::mono;
using support::monos;

TEST_SUITE("segment") {
  TEST_CASE("strata") {
    CHECK(stratum(2, 2, 3) == monos(3, {"x1*x3", "x2*x3", "x3^2"}));
    CHECK(stratum(2, 2, 5).size() == binomial(3, 1));
    CHECK(stratum(5, 2, 6) == monos(6, {"x1*x6", "x2*x6", "x3*x6", "x4*x6", "x5*x6", "x6^2"}));
    CHECK(stratum(1, 3, 2, true) == monos(2, {"x1^3", "x1^2*x2", "x1*x2^2", "x2^3"}));
    CHECK_THROWS_AS(stratum(0, 2, 3), Error);
    CHECK_THROWS_AS(stratum(3, 2, 3), Error);
  }

  TEST_CASE("stratum sizes match the single-corner bound") {
    for (int n = 2; n <= 6; ++n) {
      for (int k = 1; k < n; ++k) {
        for (int l = 1; l <= 4; ++l) CHECK(stratum(k, l, n).size() == binomial(k + l - 1, l - 1));
      }
    }
  }

  TEST_CASE("shadows") {
    CHECK(shadow(monos(3, {"x1*x2"})) == monos(3, {"x1^2*x2", "x1*x2^2", "x1*x2*x3"}));
    CHECK(shadow(monos(2, {"x2"}), 2) == monos(2, {"x1^2*x2", "x1*x2^2", "x2^3"}));
    CHECK_THROWS_AS(shadow(monos(2, {"x2", "x1^2"})), Error);
  }

  TEST_CASE("lex shadows") {
    auto seg = lex_shadow(monos(3, {"x1*x2"}), 3);
    CHECK(seg.materialize() == monos(3, {"x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3"}));
    std::vector<Monomial> a1;
    for (const auto& u : stratum(3, 3, 6)) {
      if (lex_compare(u, mono("x2*x4^2", 6)) != LexOrder::Less) a1.push_back(u);
    }
    auto big = lex_shadow(a1, 5);
    CHECK(big.top() == mono("x1^5", 6));
    CHECK(big.bottom() == mono("x2*x4^2*x6^2", 6));
    CHECK(lex_shadow({}, 4).is_empty());
    CHECK_THROWS_AS(lex_shadow(monos(3, {"x1*x2"}), 2), Error);
  }

  TEST_CASE("ordinary shadow sits inside the lex shadow") {
    const int n = 4;
    auto mons = enumerate_degree(n, 2);
    for (std::size_t a = 0; a < mons.size(); ++a) {
      for (std::size_t b = a; b < mons.size(); ++b) {
        LexSegment seg(mons[a], mons[b]);
        auto members = seg.materialize();
        auto lex = lex_shadow(members, 4);
        for (const auto& z : shadow(members, 2)) CHECK(lex.contains(z));
      }
    }
  }

  TEST_CASE("ranked set difference") {
    std::vector<Monomial> a;
    for (const auto& u : stratum(2, 5, 6)) {
      if (lex_compare(u, mono("x3^5", 6)) != LexOrder::Less) a.push_back(u);
    }
    LexSegment l(mono("x1^5", 6), mono("x1*x4^2*x6^2", 6));
    CHECK(set_difference_ranked(a, l, 2) == mono("x2^3*x3^2", 6));
    auto rest = set_difference(a, l);
    CHECK_THROWS_AS(set_difference_ranked(a, l, rest.size() + 1), Error);
    std::vector<Monomial> b{mono("x1*x6", 6), mono("x2*x6", 6)};
    CHECK(set_difference_ranked(b, LexSegment::empty(), 2) == mono("x2*x6", 6));
  }

  TEST_CASE("segments") {
    CHECK_THROWS_AS(LexSegment(mono("x2^2", 3), mono("x1^2", 3)), Error);
    LexSegment s(mono("x1*x3", 3), mono("x2^2", 3));
    CHECK(s.materialize() == monos(3, {"x1*x3", "x2^2"}));
    CHECK(s.contains(mono("x2^2", 3)));
    CHECK_FALSE(s.contains(mono("x2*x3", 3)));
  }
}
