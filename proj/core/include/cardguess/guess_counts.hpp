#pragma once

#include <compare>

#include "cardguess/deck.hpp"

namespace cardguess {

// Counters of one play-through of the guessing game.
struct GuessCounts {
  int t = 0;  // certified correct guesses
  int l = 0;  // correct guesses at a strict majority
  int p = 0;  // correct guesses at a tie
  int w = 0;  // tie states visited
  int c = 0;  // total correct guesses

  friend auto operator<=>(const GuessCounts&, const GuessCounts&) = default;
};

// c = t + l + p, t + l = m1, 0 <= p <= w <= m2, m1 <= c <= m1 + m2.
bool satisfies_invariants(const GuessCounts& counts, const DeckComposition& deck);

}  // namespace cardguess
