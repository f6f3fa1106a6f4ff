#include "cardguess/deck.hpp"

#include <string>

#include "cardguess/errors.hpp"

namespace cardguess {

DeckComposition::DeckComposition(int m1, int m2) : m1_(m1), m2_(m2) {
  if (m2 < 0 || m1 < m2)
    throw DomainError("deck (" + std::to_string(m1) + ", " + std::to_string(m2) +
                      ") violates m1 >= m2 >= 0");
}

OrientedDeck orient(int first_colour, int second_colour) {
  if (first_colour < 0 || second_colour < 0) throw DomainError("negative card count");
  if (first_colour >= second_colour)
    return {DeckComposition(first_colour, second_colour), false};
  return {DeckComposition(second_colour, first_colour), true};
}

}  // namespace cardguess
