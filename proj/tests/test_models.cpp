#include "doctest.h"

#include "cardguess/errors.hpp"
#include "cardguess/exact.hpp"
#include "cardguess/models.hpp"
#include "test_support.hpp"

using namespace cardguess;
using cardguess::testing::decks_up_to;
using cardguess::testing::label;
using cardguess::testing::q;

namespace {
constexpr Step L = Step::Left;
constexpr Step D = Step::Down;
}  // namespace

TEST_SUITE("models") {
  TEST_CASE("urn equality examples") {
    CHECK(urn_equality_dist({2, 1}) == DiscretePMF({{0, q("1/3")}, {1, q("2/3")}}));
    CHECK(urn_equality_dist({1, 1}) == DiscretePMF::point_mass(1));
    CHECK(urn_equality_dist({4, 0}) == DiscretePMF::point_mass(0));
    CHECK_THROWS_AS(urn_equality_dist({11, 10}), ResourceLimitError);
  }

  TEST_CASE("walk returns examples") {
    CHECK(dyck_return_dist(2, 0) == DiscretePMF::point_mass(1));
    CHECK(dyck_return_dist(4, 0) == DiscretePMF({{1, q("1/3")}, {2, q("2/3")}}));
    CHECK(dyck_return_dist(3, -3) == DiscretePMF::point_mass(0));
    CHECK_THROWS_AS(dyck_return_dist(3, 0), DomainError);
    CHECK_THROWS_AS(dyck_return_dist(2, 4), DomainError);
    CHECK_THROWS_AS(dyck_return_dist(24, 0), ResourceLimitError);
  }

  TEST_CASE("mirror map examples") {
    const PlanePath wedge({2, 1}, {L, D, L});
    CHECK(mirror_map(wedge) == wedge);
    const PlanePath above({2, 1}, {L, L, D});
    CHECK(mirror_map(above) == wedge);
    CHECK_THROWS_AS(PlanePath({2, 1}, {L, D}), DomainError);
    CHECK_THROWS_AS(PlanePath({2, 1}, {D, D, L}), DomainError);
  }

  TEST_CASE("path statistics") {
    const PlanePath p({2, 2}, {L, D, D, L});
    CHECK(p.equality_visits() == 2);
    CHECK_FALSE(p.in_wedge());
    CHECK(urn_path_weight(p) == q("1/6"));
    CHECK_THROWS_AS(card_path_weight(p), DomainError);
    const PlanePath w = mirror_map(p);
    CHECK(w.steps() == std::vector<Step>{D, L, D, L});
    CHECK(card_path_weight(w) == q("2/3"));
    const auto walk = deck_to_walk(p);
    CHECK(walk.steps() == std::vector<int>{-1, 1, 1, -1});
    CHECK(walk.returns_to_zero() == 2);
    CHECK(walk.final_altitude() == 0);
    CHECK_THROWS_AS(DyckWalk({1, 0}), DomainError);
  }

  TEST_CASE("urn and walk laws equal the tie-visit law up to M = 14") {
    for (const auto& deck : decks_up_to(14)) {
      CAPTURE(label(deck));
      const auto w = marginal_W(deck);
      REQUIRE(urn_equality_dist(deck) == w);
      REQUIRE(dyck_return_dist(deck.total(), deck.m2() - deck.m1()) == w);
    }
  }

  TEST_CASE("walk returns match equality visits path by path") {
    for (const auto& deck : decks_up_to(10))
      for (const auto& path : all_paths(deck)) {
        const auto walk = deck_to_walk(path);
        REQUIRE(walk.returns_to_zero() == path.equality_visits());
        REQUIRE(walk.final_altitude() == deck.m2() - deck.m1());
      }
  }

  TEST_CASE("mirror fibers and weights up to M = 12") {
    for (const auto& deck : decks_up_to(12)) {
      CAPTURE(label(deck));
      const auto r = mirror_fiber_check(deck);
      CHECK(r.full_paths == binomial(deck.total(), deck.m1()));
      REQUIRE(r.ok());
    }
  }
}
