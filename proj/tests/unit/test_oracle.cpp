#include <doctest.h>

#include <set>

#include "exbetti/error.hpp"
#include "exbetti/json_io.hpp"
#include "exbetti/oracle.hpp"
#include "support.hpp"

using namespace exbetti;
using support::ideal;
using support::spec;

TEST_SUITE("oracle") {
  TEST_CASE("exact rank") {
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == 3);
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
    IntMatrix hilbert_like(12, std::vector<int>(12));
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) hilbert_like[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + 1) * (j + 2) % 97 + (i == j ? 50 : 0);
    }
    CHECK(exact_rank(hilbert_like) == 12);
  }

  TEST_CASE("koszul slices square to zero") {
    auto i = ideal(4, {"x1^2", "x1*x2", "x2^2", "x1*x3"});
    auto slice = koszul_slice(i, {2, 2, 1, 1});
    CHECK(slice.j == 6);
    CHECK_NOTHROW(slice.check_d_squared());
  }

  TEST_CASE("koszul tables") {
    auto t = koszul_betti(ideal(6, {"x1^2", "x1*x2", "x1*x3"}), 8);
    CHECK(t.entries().size() == 3);
    CHECK(t.at(0, 2) == 3);
    CHECK(t.at(1, 3) == 3);
    CHECK(t.at(2, 4) == 1);

    auto p = koszul_betti(ideal(2, {"x1*x2"}), 4);
    CHECK(p.entries().size() == 1);
    CHECK(p.at(0, 2) == 1);

    auto m = module_from_json(support::load_fixture("rank4_module.json"));
    CHECK(koszul_betti(m) == ek_betti(m));
  }

  TEST_CASE("koszul handles non-stable input") {
    auto i = ideal(3, {"x1*x2", "x2*x3", "x1*x3"});
    auto t = koszul_betti(i, 6);
    CHECK(t.at(0, 2) == 3);
    CHECK(t.at(1, 3) == 2);
    CHECK(t.entries().size() == 2);
  }

  TEST_CASE("cap handling") {
    auto i = ideal(6, {"x1^2", "x1*x2", "x1*x3"});
    try {
      koszul_betti(i, 1);
      FAIL("expected CapTooLow");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CapTooLow);
    }
    CHECK_THROWS_AS(koszul_betti(i, 3), Error);
    CHECK(koszul_betti(i, 8) == koszul_betti(i, 12));
  }

  TEST_CASE("census at n = 2") {
    auto two = strongly_stable_census(2, 2);
    CHECK(two.size() == 6);
    std::set<std::string> seen;
    for (const auto& i : two) seen.insert(to_json(i).dump());
    CHECK(seen.count(R"({"n":2,"generators":["x1"]})") == 1);
    CHECK(seen.count(R"({"n":2,"generators":["x1","x2"]})") == 1);
    CHECK(seen.count(R"({"n":2,"generators":["x1","x2^2"]})") == 1);
    CHECK(seen.count(R"({"n":2,"generators":["x1^2"]})") == 1);
    CHECK(seen.count(R"({"n":2,"generators":["x1^2","x1*x2"]})") == 1);
    CHECK(seen.count(R"({"n":2,"generators":["x1^2","x1*x2","x2^2"]})") == 1);
    CHECK(strongly_stable_census(2, 3).size() == 14);
  }

  TEST_CASE("census members are distinct and strongly stable") {
    auto all = strongly_stable_census(3, 3);
    std::set<std::string> seen;
    for (const auto& i : all) {
      CHECK(is_strongly_stable(i));
      CHECK(is_stable(i));
      seen.insert(to_json(i).dump());
    }
    CHECK(seen.size() == all.size());
    CensusLimits few;
    few.max_gens = 2;
    for (const auto& i : strongly_stable_census(3, 3, few)) CHECK(i.generators().size() <= 2);
  }

  TEST_CASE("census guard rails and budget") {
    CHECK_THROWS_AS(strongly_stable_census(6, 2), Error);
    CHECK_THROWS_AS(strongly_stable_census(3, 7), Error);
    CensusLimits tiny;
    tiny.budget = 10;
    try {
      strongly_stable_census(4, 4, tiny);
      FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
  }

  TEST_CASE("brute-force realizability") {
    auto s = spec(4, {{3, 2}, {2, 3}}, {1, 1});
    auto w = bruteforce_realizability(s);
    REQUIRE(w);
    CHECK(extremal_from_generators(*w) == std::vector<Extremal>{{{3, 2}, 1}, {{2, 3}, 1}});
    CHECK(check_values(s, Mode::StrictPaper).feasible);
    CHECK_FALSE(bruteforce_realizability(spec(4, {{2, 2}}, {4})));
    CHECK_FALSE(check_values(spec(4, {{2, 2}}, {4}), Mode::Coupled).feasible);
  }

  TEST_CASE("module brute force") {
    auto ok = bruteforce_module_realizability(spec(4, {{2, 2}}, {6}), 2);
    REQUIRE(ok);
    CHECK(extremal_from_table(ek_betti(*ok)).corners == std::vector<Extremal>{{{2, 2}, 6}});
    CHECK_FALSE(bruteforce_module_realizability(spec(4, {{2, 2}}, {7}), 2));
  }
}
