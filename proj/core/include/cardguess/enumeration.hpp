#pragma once

#include <map>

#include "cardguess/deck.hpp"
#include "cardguess/guess_counts.hpp"
#include "cardguess/pmf.hpp"
#include "cardguess/rational.hpp"

namespace cardguess {

inline constexpr int kDefaultEnumerationCap = 20;
inline constexpr int kHardEnumerationCap = 24;

// Exact joint law of all five counters.
using CounterLaw = std::map<GuessCounts, Rational>;

// Brute-force oracle: plays the majority guesser against every one of the
// C(m1+m2, m1) card orders, branching into both coin outcomes (weight 1/2
// each) at every tie. Throws ResourceLimitError when m1 + m2 > cap or
// cap > kHardEnumerationCap.
CounterLaw enumerate_decks(const DeckComposition& deck, int cap = kDefaultEnumerationCap);

// Projections of an enumerated law.
JointPMF counter_law_WT(const CounterLaw& law);
DiscretePMF counter_law_T(const CounterLaw& law);
DiscretePMF counter_law_L(const CounterLaw& law);
DiscretePMF counter_law_P(const CounterLaw& law);
DiscretePMF counter_law_W(const CounterLaw& law);
DiscretePMF counter_law_C(const CounterLaw& law);

}  // namespace cardguess
