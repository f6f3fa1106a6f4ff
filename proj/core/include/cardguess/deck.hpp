#pragma once

#include <compare>
#include <cstdint>

namespace cardguess {

// A deck of m1 majority-colour and m2 minority-colour cards, always stored
// with m1 >= m2 >= 0.
class DeckComposition {
 public:
  // Throws DomainError unless m1 >= m2 >= 0.
  DeckComposition(int m1, int m2);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int total() const { return m1_ + m2_; }
  // d = m1 - m2
  int difference() const { return m1_ - m2_; }

  friend auto operator<=>(const DeckComposition&, const DeckComposition&) = default;

 private:
  int m1_;
  int m2_;
};

struct OrientedDeck {
  DeckComposition deck;
  // True when the caller's first colour became the minority colour.
  bool swapped;
};

// Accepts the two colour counts in any order and returns the canonical
// composition together with whether the colours were exchanged.
OrientedDeck orient(int first_colour, int second_colour);

}  // namespace cardguess
