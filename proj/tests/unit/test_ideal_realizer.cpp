#include <doctest.h>

#include "exbetti/error.hpp"
#include "exbetti/ideal_realizer.hpp"
#include "exbetti/json_io.hpp"
#include "support.hpp"

using namespace exbetti;
using support::mono;
using support::spec;

TEST_SUITE("ideal-realizer") {
  TEST_CASE("spec validation") {
    CHECK_NOTHROW(spec(6, {{5, 2}, {3, 3}}, {1, 1}).validate());
    CHECK_THROWS_AS(spec(6, {{6, 2}}, {1}).validate(), Error);
    CHECK_THROWS_AS(spec(6, {{3, 2}, {3, 3}}, {1, 1}).validate(), Error);
    CHECK_THROWS_AS(spec(6, {{3, 3}, {2, 3}}, {1, 1}).validate(), Error);
    CHECK_THROWS_AS(spec(6, {{3, 1}}, {1}).validate(), Error);
    CHECK_THROWS_AS(spec(6, {{3, 2}}, {0}).validate(), Error);
  }

  TEST_CASE("positions") {
    CHECK(validate_positions(spec(8, {{7, 2}, {5, 4}, {3, 6}, {2, 9}}, {1, 1, 1, 1})).admissible());
    CHECK(validate_positions(spec(4, {{3, 2}, {2, 3}}, {1, 1})).admissible());
    CHECK(validate_positions(spec(4, {{2, 2}, {1, 3}}, {1, 1})).status == PositionStatus::Uncovered);
    CHECK(validate_positions(spec(5, {{3, 2}, {2, 3}}, {1, 1})).admissible());
    CHECK(validate_positions(spec(5, {{3, 2}, {2, 3}, {1, 4}}, {1, 1, 1})).status == PositionStatus::Uncovered);
    CHECK(validate_positions(spec(3, {{2, 2}, {1, 4}}, {1, 1})).status == PositionStatus::Uncovered);
    CHECK(validate_positions(spec(6, {{5, 2}, {4, 3}, {3, 4}, {2, 5}}, {1, 1, 1, 1})).admissible());
    CHECK(validate_positions(spec(6, {{4, 3}, {3, 4}, {2, 5}}, {1, 1, 1})).admissible());
    CHECK(validate_positions(spec(4, {{3, 3}, {2, 4}, {1, 5}}, {1, 1, 1})).admissible());
    CHECK(validate_positions(spec(6, {{2, 2}}, {1})).admissible());
  }

  TEST_CASE("bounds for corners (5,2), (3,3), (2,5)") {
    auto s = spec(6, {{5, 2}, {3, 3}, {2, 5}}, {1, 3, 1});
    auto report = compute_bounds(s);
    REQUIRE(report.corners.size() == 3);
    CHECK(report.corners[0].bottom == mono("x1*x6", 6));
    CHECK(report.corners[1].bottom == mono("x2*x4^2", 6));
    CHECK(report.corners[2].bottom == mono("x3^5", 6));
    CHECK(report.corners[0].admissible == 1);
    CHECK(report.corners[1].admissible == 3);
    CHECK(report.corners[2].admissible == 1);

    auto two = compute_bounds(spec(6, {{5, 2}, {2, 5}}, {2, 1}));
    CHECK(two.corners[0].bottom == mono("x2*x6", 6));
    CHECK(two.corners[0].admissible == 2);
    CHECK(two.corners[1].admissible == 1);

    auto other = compute_bounds(spec(6, {{3, 3}, {2, 5}}, {1, 1}));
    CHECK(other.corners[0].bottom == mono("x2*x4^2", 6));
    CHECK(other.corners[1].bottom == mono("x3^5", 6));
  }

  TEST_CASE("value checks") {
    auto col1 = spec(6, {{5, 2}, {3, 3}, {2, 5}}, {1, 3, 1});
    CHECK(check_values(col1, Mode::StrictPaper).feasible);
    CHECK(check_values(col1, Mode::Coupled).feasible);

    auto disc = spec(6, {{3, 3}, {2, 5}}, {4, 2});
    auto coupled = check_values(disc, Mode::Coupled);
    CHECK(coupled.feasible);
    CHECK(coupled.bounds == std::vector<std::size_t>{7, 5});
    auto strict = check_values(disc, Mode::StrictPaper);
    CHECK_FALSE(strict.feasible);
    CHECK(strict.failing == 1);

    auto single = check_values(spec(6, {{2, 3}}, {7}), Mode::StrictPaper);
    CHECK_FALSE(single.feasible);
    CHECK(single.bounds == std::vector<std::size_t>{6});
    CHECK(check_values(spec(6, {{2, 3}}, {6}), Mode::Coupled).feasible);
  }

  TEST_CASE("column witnesses") {
    auto i1 = construct_ideal(spec(6, {{5, 2}, {3, 3}, {2, 5}}, {1, 3, 1}));
    CHECK(i1 == ideal_from_json(support::load_fixture("col1_ideal.json")));
    auto i3 = construct_ideal(spec(6, {{5, 2}, {2, 5}}, {2, 1}));
    CHECK(i3 == ideal_from_json(support::load_fixture("col3_ideal.json")));
    auto i2 = construct_ideal(spec(6, {{3, 3}, {2, 5}}, {4, 2}), Mode::Coupled);
    CHECK(i2 == ideal_from_json(support::load_fixture("col2_ideal.json")));
    try {
      construct_ideal(spec(6, {{3, 3}, {2, 5}}, {4, 2}), Mode::StrictPaper);
      FAIL("strict mode should refuse");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InfeasibleSpec);
    }
  }

  TEST_CASE("single corner with value one") {
    for (int k = 1; k <= 4; ++k) {
      for (int l = 2; l <= 4; ++l) {
        auto i = construct_ideal(spec(5, {{k, l}}, {1}));
        std::vector<Monomial> expected;
        for (int j = 1; j <= k + 1; ++j) expected.push_back(Monomial::variable(5, 1, l - 1).times_var(j));
        CHECK(i.generators() == expected);
      }
    }
  }

  TEST_CASE("degree two chains") {
    auto i = construct_degree2_chain(spec(8, {{7, 2}, {5, 4}, {3, 6}, {2, 9}}, {1, 1, 1, 1}));
    CHECK(i == ideal_from_json(support::load_fixture("chain_I.json")));
    CHECK(i.generators().size() == 16);
    auto j = construct_degree2_chain(spec(8, {{7, 2}, {6, 4}, {5, 5}, {4, 7}, {3, 9}, {2, 10}}, {1, 1, 1, 1, 1, 1}));
    CHECK(j == ideal_from_json(support::load_fixture("chain_J.json")));
    CHECK(j.generators().size() == 22);
    auto small = construct_degree2_chain(spec(4, {{3, 2}, {2, 3}}, {1, 1}));
    CHECK(extremal_from_generators(small) == std::vector<Extremal>{{{3, 2}, 1}, {{2, 3}, 1}});
    CHECK_THROWS_AS(construct_degree2_chain(spec(6, {{4, 3}}, {1})), Error);
  }

  TEST_CASE("witness verification catches mismatches") {
    auto i1 = ideal_from_json(support::load_fixture("col1_ideal.json"));
    CHECK_NOTHROW(verify_witness(i1, spec(6, {{5, 2}, {3, 3}, {2, 5}}, {1, 3, 1})));
    try {
      verify_witness(i1, spec(6, {{5, 2}, {3, 3}, {2, 5}}, {1, 2, 1}));
      FAIL("expected VerificationFailed");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::VerificationFailed);
    }
  }

  TEST_CASE("uncovered and rejected specs raise the matching errors") {
    try {
      construct_ideal(spec(4, {{2, 2}, {1, 3}}, {1, 1}));
      FAIL("expected Uncovered");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Uncovered);
    }
    try {
      construct_ideal(spec(4, {{3, 3}, {2, 4}, {1, 5}}, {100, 1, 1}));
      FAIL("expected InfeasibleSpec");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InfeasibleSpec);
    }
  }
}
