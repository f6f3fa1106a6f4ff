#include "cardguess/exact.hpp"

#include <string>

#include "cardguess/errors.hpp"

namespace cardguess {

namespace {

Rational ratio(const Integer& numerator, const Integer& denominator) {
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

void require_cdf_range(const DeckComposition& deck, int k, int l) {
  const bool in_range = l >= 1 && l <= deck.m1() && k >= 0 && k <= deck.m2() &&
                        !(l == deck.m1() && k == deck.m2());
  if (!in_range)
    throw DomainError("CDF closed form needs 1 <= l <= m1, 0 <= k <= m2, (l,k) != (m1,m2); got k=" +
                      std::to_string(k) + ", l=" + std::to_string(l));
}

}  // namespace

void for_each_joint_numerator(
    const DeckComposition& deck,
    const std::function<void(int, int, const Integer&)>& visit) {
  const int m1 = deck.m1();
  const int m2 = deck.m2();
  const std::int64_t total = deck.total();

  if (m2 == 0) {
    visit(0, m1, Integer(1));
    return;
  }
  if (m1 == 1 && m2 == 1) {
    visit(1, 1, Integer(2));
    return;
  }

  // k = 0: C(M-l-1, m2-1) - C(M-l-1, m1-1), l >= 1.
  {
    DescendingBinomial a(total - 2, m2 - 1);
    DescendingBinomial b(total - 2, m1 - 1);
    for (int l = 1; l <= m1; ++l) {
      visit(0, l, Integer(a.value() - b.value()));
      a.step();
      b.step();
    }
  }

  // k, l >= 1: 2^k C(M-l-k, m1-1) - 2^{k+1} C(M-l-k-1, m1-1). The first
  // binomial vanishes once l + k > m2 + 1, which bounds the l range; the
  // pair (l, k) = (m1, m2) lies outside it except for the (1,1) deck.
  Integer power = 1;
  Integer numerator;
  for (int k = 1; k <= m2; ++k) {
    power *= 2;
    DescendingBinomial upper(total - 1 - k, m1 - 1);
    for (int l = 1; l <= m2 + 1 - k && l <= m1; ++l) {
      const Integer current = upper.value();
      upper.step();
      numerator = power * current - 2 * power * upper.value();
      visit(k, l, numerator);
    }
  }
}

JointPMF joint_pmf_WT(const DeckComposition& deck) {
  const Integer denominator = binomial(deck.total(), deck.m1());
  std::map<JointKey, Rational> masses;
  for_each_joint_numerator(deck, [&](int k, int l, const Integer& numerator) {
    if (numerator != 0) masses.emplace(JointKey{k, l}, ratio(numerator, denominator));
  });
  return JointPMF(std::move(masses));
}

DiscretePMF CommonDenominatorLaw::to_pmf() const {
  std::map<std::int64_t, Rational> masses;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0) masses.emplace(first + static_cast<std::int64_t>(i), ratio(weights[i], denominator));
  return DiscretePMF(std::move(masses));
}

CommonDenominatorLaw marginal_T_weights(const DeckComposition& deck) {
  const int m1 = deck.m1();
  const int m2 = deck.m2();
  CommonDenominatorLaw law;
  if (m2 == 0) {
    law.first = m1;
    law.weights = {Integer(1)};
    return law;
  }
  // C(M-l-1, m2-1) + C(M-l-1, m1-1), l = 1..m1
  law.first = 1;
  law.denominator = binomial(deck.total(), m1);
  law.weights.reserve(m1);
  DescendingBinomial a(deck.total() - 2, m2 - 1);
  DescendingBinomial b(deck.total() - 2, m1 - 1);
  for (int l = 1; l <= m1; ++l) {
    law.weights.push_back(a.value() + b.value());
    a.step();
    b.step();
  }
  return law;
}

CommonDenominatorLaw marginal_W_weights(const DeckComposition& deck) {
  const int m1 = deck.m1();
  const int m2 = deck.m2();
  CommonDenominatorLaw law;
  if (m1 == 0) {
    law.weights = {Integer(1)};
    return law;
  }
  // 2^k C(M-k, m1) - 2^{k+1} C(M-k-1, m1), k = 0..m2
  law.denominator = binomial(deck.total(), m1);
  law.weights.reserve(m2 + 1);
  DescendingBinomial column(deck.total(), m1);
  Integer power = 1;
  for (int k = 0; k <= m2; ++k) {
    const Integer current = column.value();
    column.step();
    law.weights.push_back(power * current - 2 * power * column.value());
    power *= 2;
  }
  return law;
}

DiscretePMF marginal_T(const DeckComposition& deck) { return marginal_T_weights(deck).to_pmf(); }

DiscretePMF marginal_W(const DeckComposition& deck) { return marginal_W_weights(deck).to_pmf(); }

Rational joint_cdf_WT(const DeckComposition& deck, int k, int l) {
  require_cdf_range(deck, k, l);
  const std::int64_t m1 = deck.m1();
  const std::int64_t m2 = deck.m2();
  const std::int64_t total = deck.total();
  const Integer power = pow2(k + 1);
  const Integer bracket = binomial(total - l - 1, m2) + binomial(total - l - 1, m1) +
                          power * binomial(total - k - 1, m1) -
                          power * binomial(total - k - l - 1, m1);
  return 1 - ratio(bracket, binomial(total, m1));
}

Rational one_sided_cdf_WT(const DeckComposition& deck, int k, int l) {
  require_cdf_range(deck, k, l);
  const std::int64_t m1 = deck.m1();
  const std::int64_t m2 = deck.m2();
  const std::int64_t total = deck.total();
  const Integer numerator = binomial(total - l - 1, m2 - 1) + binomial(total - l - 1, m1 - 1) -
                            pow2(k + 1) * binomial(total - k - l - 1, m1 - 1);
  return ratio(numerator, binomial(total, m1));
}

DiscretePMF pmf_C(const DeckComposition& deck) {
  const std::int64_t total = deck.total();
  if (total < 1) throw DomainError("pmf_C needs at least one card");
  const std::int64_t m1 = deck.m1();
  const Integer denominator = binomial(total, m1);
  std::map<std::int64_t, Rational> masses;
  for (std::int64_t c = m1; c <= total; ++c)
    masses.emplace(c, ratio(binomial(total, c) - binomial(total, c + 1), denominator));
  return DiscretePMF(std::move(masses));
}

DiscretePMF pmf_P_from_W(const DeckComposition& deck) {
  const DiscretePMF w = marginal_W(deck);
  std::map<std::int64_t, Rational> masses;
  for (const auto& [k, mass] : w.masses()) {
    const Rational weight = mass / Rational(pow2(k));
    for (std::int64_t j = 0; j <= k; ++j) masses[j] += weight * Rational(binomial(k, j));
  }
  return DiscretePMF(std::move(masses));
}

DiscretePMF pmf_L(const DeckComposition& deck) {
  return marginal_T(deck).reflected(deck.m1());
}

Rational balanced_W_mass(int m, int k) {
  if (m < 2 || k < 1 || k > m) throw DomainError("balanced_W_mass needs m >= 2, 1 <= k <= m");
  const Integer numerator = pow2(k) * binomial(2 * m - k - 1, m - 1) * k;
  return ratio(numerator, binomial(2 * m, m) * m);
}

Rational balanced_W_mass_misprinted(int m, int k) {
  if (m < 2 || k < 1 || k > m) throw DomainError("balanced_W_mass needs m >= 2, 1 <= k <= m");
  const Integer numerator = pow2(k) * binomial(2 * m - k - 1, m - 2) * k;
  return ratio(numerator, binomial(2 * m, m) * m);
}

}  // namespace cardguess
