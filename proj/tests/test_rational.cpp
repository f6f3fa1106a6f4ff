#include "doctest.h"

#include "cardguess/deck.hpp"
#include "cardguess/errors.hpp"
#include "cardguess/pmf.hpp"
#include "cardguess/rational.hpp"
#include "test_support.hpp"

using namespace cardguess;
using cardguess::testing::q;

TEST_SUITE("rational") {
  TEST_CASE("binomial values and out-of-range convention") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, -1) == 0);
    CHECK(binomial(52, 26) == Integer("495918532948104"));
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(0, 0) == 1);
  }

  TEST_CASE("binomial agrees with Pascal's triangle") {
    std::vector<Integer> row{1};
    for (int n = 1; n <= 60; ++n) {
      std::vector<Integer> next(n + 1, 1);
      for (int r = 1; r < n; ++r) next[r] = row[r - 1] + row[r];
      row = next;
      for (int r = 0; r <= n; ++r) REQUIRE(binomial(n, r) == row[r]);
    }
  }

  TEST_CASE("descending binomial walks the column") {
    DescendingBinomial b(30, 7);
    for (int n = 30; n >= -2; --n) {
      CHECK(b.upper() == n);
      CHECK(b.value() == binomial(n, 7));
      b.step();
    }
    DescendingBinomial zero(10, 0);
    for (int n = 10; n >= 0; --n, zero.step()) CHECK(zero.value() == 1);
    CHECK(zero.value() == 0);
  }

  TEST_CASE("string round trip") {
    for (const char* text : {"2/3", "-7/4", "0/1", "5/1", "123456789012345678901234567891/7"}) {
      const Rational r = parse_rational(text);
      CHECK(to_string(r) == text);
      CHECK(parse_rational(to_string(r)) == r);
    }
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("3")) == "3/1");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
  }

  TEST_CASE("ratio_to_double handles huge operands") {
    const Integer a = binomial(4000, 2000);
    const Integer b = a * 3;
    CHECK(ratio_to_double(a, b) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(ratio_to_double(0, b) == 0.0);
    CHECK(round_significant(2.0 / 3.0) == 0.666666666667);
  }
}

TEST_SUITE("deck") {
  TEST_CASE("composition validation and orientation") {
    CHECK_THROWS_AS(DeckComposition(1, 2), DomainError);
    CHECK_THROWS_AS(DeckComposition(-1, -1), DomainError);
    const DeckComposition d(5, 3);
    CHECK(d.total() == 8);
    CHECK(d.difference() == 2);
    const auto o = orient(2, 7);
    CHECK(o.swapped);
    CHECK(o.deck == DeckComposition(7, 2));
    CHECK_FALSE(orient(7, 2).swapped);
    CHECK_THROWS_AS(orient(-1, 3), DomainError);
  }
}

TEST_SUITE("pmf") {
  TEST_CASE("discrete pmf basics") {
    DiscretePMF p({{1, q("1/3")}, {2, q("0")}, {4, q("2/3")}});
    CHECK(p.support() == std::vector<std::int64_t>{1, 4});
    CHECK(p.total() == 1);
    CHECK(p.mean() == 3);
    CHECK(p.cdf(3) == q("1/3"));
    CHECK(p.shifted(2).mass(6) == q("2/3"));
    CHECK(p.reflected(4).mass(0) == q("2/3"));
    CHECK_THROWS_AS(DiscretePMF({{0, q("-1/2")}}), DomainError);
  }

  TEST_CASE("joint pmf marginals") {
    JointPMF j({{{0, 2}, q("1/3")}, {{1, 1}, q("2/3")}});
    CHECK(j.total() == 1);
    CHECK(j.first_marginal() == DiscretePMF({{0, q("1/3")}, {1, q("2/3")}}));
    CHECK(j.second_marginal() == DiscretePMF({{1, q("2/3")}, {2, q("1/3")}}));
    CHECK(j.mass(5, 5) == 0);
  }
}
