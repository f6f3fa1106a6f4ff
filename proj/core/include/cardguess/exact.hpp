#pragma once

// Exact finite-deck laws of the card-guessing counters:
//   T  certified correct guesses (one colour exhausted),
//   L  correct guesses at a strict-majority state,
//   P  correct guesses at a tie state,
//   W  visits to tie states (j, j) with j >= 1,
//   C  = T + L + P, the total number of correct guesses,
// for the guesser who always names the majority colour.

#include <cstdint>
#include <functional>
#include <vector>

#include "cardguess/deck.hpp"
#include "cardguess/pmf.hpp"
#include "cardguess/rational.hpp"

namespace cardguess {

// Calls `visit(k, l, numerator)` for every (W, T) = (k, l) pair in the
// structural support of the joint law, where the probability equals
// numerator / C(m1 + m2, m1). Pairs are visited in lexicographic order;
// zero numerators are included.
void for_each_joint_numerator(
    const DeckComposition& deck,
    const std::function<void(int k, int l, const Integer& numerator)>& visit);

// P{X = first + i} = weights[i] / denominator, all sharing one denominator.
struct CommonDenominatorLaw {
  std::int64_t first = 0;
  std::vector<Integer> weights;
  Integer denominator = 1;

  DiscretePMF to_pmf() const;
};

CommonDenominatorLaw marginal_T_weights(const DeckComposition& deck);
CommonDenominatorLaw marginal_W_weights(const DeckComposition& deck);

// Joint law of (W, T).
JointPMF joint_pmf_WT(const DeckComposition& deck);

DiscretePMF marginal_T(const DeckComposition& deck);
DiscretePMF marginal_W(const DeckComposition& deck);

// P{W <= k and T <= l}; requires 1 <= l <= m1, 0 <= k <= m2 and
// (l, k) != (m1, m2).
Rational joint_cdf_WT(const DeckComposition& deck, int k, int l);

// P{W <= k and T = l}; same argument range as joint_cdf_WT.
Rational one_sided_cdf_WT(const DeckComposition& deck, int k, int l);

// Law of C; requires m1 + m2 >= 1.
DiscretePMF pmf_C(const DeckComposition& deck);

// Law of P as a Binomial(W, 1/2) mixture over the law of W.
DiscretePMF pmf_P_from_W(const DeckComposition& deck);

// Law of L, using L = m1 - T.
DiscretePMF pmf_L(const DeckComposition& deck);

// Balanced-deck closed form
//   P{W_{m,m} = k} = 2^k C(2m-k-1, m-1) (k/m) / C(2m, m),  1 <= k <= m.
// The lower binomial index is m - 1; with m - 2 the values no longer agree
// with marginal_W (already at m = 2).
Rational balanced_W_mass(int m, int k);

// Same expression with the lower index taken as m - 2, kept only so the
// verification report can show the disagreement.
Rational balanced_W_mass_misprinted(int m, int k);

}  // namespace cardguess
