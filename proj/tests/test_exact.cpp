#include "doctest.h"

#include "cardguess/errors.hpp"
#include "cardguess/exact.hpp"
#include "test_support.hpp"

using namespace cardguess;
using cardguess::testing::decks_up_to;
using cardguess::testing::label;
using cardguess::testing::q;

namespace {

DiscretePMF law(std::initializer_list<std::pair<const std::int64_t, Rational>> masses) {
  return DiscretePMF(std::map<std::int64_t, Rational>(masses));
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("joint law examples") {
    CHECK(joint_pmf_WT({1, 1}).masses() == std::map<JointKey, Rational>{{{1, 1}, 1}});
    CHECK(joint_pmf_WT({3, 0}).masses() == std::map<JointKey, Rational>{{{0, 3}, 1}});
    CHECK(joint_pmf_WT({2, 1}).masses() ==
          std::map<JointKey, Rational>{{{0, 2}, q("1/3")}, {{1, 1}, q("2/3")}});
  }

  TEST_CASE("marginal examples") {
    CHECK(marginal_T({2, 1}) == law({{1, q("2/3")}, {2, q("1/3")}}));
    CHECK(marginal_T({5, 0}) == law({{5, 1}}));
    CHECK(marginal_T({1, 1}) == law({{1, 1}}));
    CHECK(marginal_W({1, 1}) == law({{1, 1}}));
    CHECK(marginal_W({2, 2}) == law({{1, q("1/3")}, {2, q("2/3")}}));
    CHECK(marginal_W({2, 1}) == law({{0, q("1/3")}, {1, q("2/3")}}));
  }

  TEST_CASE("cdf examples") {
    CHECK(joint_cdf_WT({2, 1}, 0, 2) == q("1/3"));
    CHECK(joint_cdf_WT({2, 1}, 1, 1) == q("2/3"));
    CHECK(one_sided_cdf_WT({2, 1}, 0, 1) == 0);
    CHECK(one_sided_cdf_WT({2, 1}, 1, 1) == q("2/3"));
    const auto joint = joint_pmf_WT({3, 2});
    Rational partial = 0;
    for (const auto& [key, m] : joint.masses())
      if (key.first <= 2 && key.second <= 2) partial += m;
    CHECK(joint_cdf_WT({3, 2}, 2, 2) == partial);
  }

  TEST_CASE("cdf argument range") {
    CHECK_THROWS_AS(joint_cdf_WT({2, 1}, 1, 2), DomainError);  // (l, k) = (m1, m2)
    CHECK_THROWS_AS(joint_cdf_WT({2, 1}, 0, 0), DomainError);
    CHECK_THROWS_AS(one_sided_cdf_WT({2, 1}, 2, 1), DomainError);
    CHECK_THROWS_AS(one_sided_cdf_WT({2, 1}, -1, 1), DomainError);
  }

  TEST_CASE("laws of C, P and L") {
    CHECK(pmf_C({2, 1}) == law({{2, q("2/3")}, {3, q("1/3")}}));
    CHECK(pmf_C({2, 2}) == law({{2, q("1/3")}, {3, q("1/2")}, {4, q("1/6")}}));
    CHECK(pmf_C({4, 0}) == law({{4, 1}}));
    CHECK(pmf_C({2, 2}).mean() == q("17/6"));
    CHECK_THROWS_AS(pmf_C({0, 0}), DomainError);
    CHECK(pmf_P_from_W({2, 1}) == law({{0, q("2/3")}, {1, q("1/3")}}));
    CHECK(pmf_P_from_W({4, 0}) == law({{0, 1}}));
    CHECK(pmf_P_from_W({2, 2}) == pmf_C({2, 2}).shifted(-2));
    CHECK(pmf_L({2, 1}) == law({{0, q("1/3")}, {1, q("2/3")}}));
    CHECK(pmf_L({6, 0}) == law({{0, 1}}));
    CHECK(pmf_L({1, 1}) == law({{0, 1}}));
  }

  TEST_CASE("empty deck") {
    CHECK(joint_pmf_WT({0, 0}).masses() == std::map<JointKey, Rational>{{{0, 0}, 1}});
  }

  TEST_CASE("normalization, support bounds and marginal consistency up to M = 40") {
    for (const auto& deck : decks_up_to(40)) {
      CAPTURE(label(deck));
      const auto joint = joint_pmf_WT(deck);
      REQUIRE(joint.total() == 1);
      const auto t = marginal_T(deck);
      const auto w = marginal_W(deck);
      REQUIRE(t.total() == 1);
      REQUIRE(w.total() == 1);
      REQUIRE(joint.second_marginal() == t);
      REQUIRE(joint.first_marginal() == w);
      REQUIRE(w.support().back() <= deck.m2());
      REQUIRE(t.support().back() <= deck.m1());
      REQUIRE(t.support().front() >= 1);
    }
  }

  TEST_CASE("both cdf closed forms equal partial sums up to M = 12") {
    for (const auto& deck : decks_up_to(12)) {
      CAPTURE(label(deck));
      const auto joint = joint_pmf_WT(deck);
      for (int k = 0; k <= deck.m2(); ++k) {
        for (int l = 1; l <= deck.m1(); ++l) {
          if (k == deck.m2() && l == deck.m1()) continue;
          Rational below = 0;
          Rational exact_l = 0;
          for (const auto& [key, m] : joint.masses()) {
            if (key.first <= k && key.second <= l) below += m;
            if (key.first <= k && key.second == l) exact_l += m;
          }
          REQUIRE(joint_cdf_WT(deck, k, l) == below);
          REQUIRE(one_sided_cdf_WT(deck, k, l) == exact_l);
        }
      }
    }
  }

  TEST_CASE("C is m1 plus a Binomial(W, 1/2) mixture up to M = 40") {
    for (const auto& deck : decks_up_to(40)) {
      CAPTURE(label(deck));
      REQUIRE(pmf_C(deck) == pmf_P_from_W(deck).shifted(deck.m1()));
      REQUIRE(pmf_L(deck) == marginal_T(deck).reflected(deck.m1()));
    }
  }

  TEST_CASE("balanced deck closed form with lower index m - 1") {
    for (int m = 2; m <= 40; ++m) {
      const auto w = marginal_W({m, m});
      for (int k = 1; k <= m; ++k) REQUIRE(balanced_W_mass(m, k) == w.mass(k));
    }
    // The printed m - 2 index disagrees already at m = 2.
    CHECK(balanced_W_mass_misprinted(2, 1) != marginal_W({2, 2}).mass(1));
    CHECK_THROWS_AS(balanced_W_mass(1, 1), DomainError);
    CHECK_THROWS_AS(balanced_W_mass(3, 0), DomainError);
  }

  TEST_CASE("common-denominator weights") {
    const auto w = marginal_W_weights({5, 3});
    CHECK(w.denominator == binomial(8, 5));
    CHECK(w.to_pmf() == marginal_W({5, 3}));
    const auto t = marginal_T_weights({5, 3});
    CHECK(t.to_pmf() == marginal_T({5, 3}));
  }
}
