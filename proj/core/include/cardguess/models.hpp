#pragma once

// Equivalent models for the tie-visit count W: the sampling-without-
// replacement urn, returns to zero of a +-1 walk, and the mirror map that
// folds full-quadrant lattice paths into the wedge x >= y.

#include <cstdint>
#include <vector>

#include "cardguess/deck.hpp"
#include "cardguess/pmf.hpp"
#include "cardguess/rational.hpp"

namespace cardguess {

inline constexpr int kDefaultUrnCap = 20;
inline constexpr int kDefaultDyckCap = 22;
inline constexpr int kHardModelCap = 26;

// Left draws a card of the first (majority) colour, Down one of the second.
enum class Step : std::uint8_t { Left, Down };

// Lattice path from (m1, m2) to the origin.
class PlanePath {
 public:
  // Throws DomainError unless the steps contain m1 Left and m2 Down steps.
  PlanePath(DeckComposition start, std::vector<Step> steps);

  const DeckComposition& start() const { return start_; }
  const std::vector<Step>& steps() const { return steps_; }

  // Visited states, from the start to (0, 0).
  std::vector<std::pair<int, int>> states() const;
  // Never strictly above the diagonal.
  bool in_wedge() const;
  // G: visits to diagonal states (j, j) with j >= 1, the start included.
  int equality_visits() const;

  friend bool operator==(const PlanePath&, const PlanePath&) = default;
  friend auto operator<=>(const PlanePath& a, const PlanePath& b) { return a.steps_ <=> b.steps_; }

 private:
  DeckComposition start_;
  std::vector<Step> steps_;
};

// Walk of +1/-1 steps starting at altitude 0.
class DyckWalk {
 public:
  // Throws DomainError for entries other than +1 and -1.
  explicit DyckWalk(std::vector<int> steps);

  const std::vector<int>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int final_altitude() const;
  // #{i >= 1 : partial sum after i steps is 0}
  int returns_to_zero() const;

 private:
  std::vector<int> steps_;
};

// Reads the deck bottom-up: the last card drawn is the first walk step, a
// second-colour card is +1 and a first-colour card is -1. The final altitude
// is m2 - m1 and returns to zero match the path's equality visits.
DyckWalk deck_to_walk(const PlanePath& path);

// Reflects every maximal excursion strictly above the diagonal (steps
// exchanged); the identity on wedge paths.
PlanePath mirror_map(const PlanePath& path);

// Product of remaining-count ratios along the path; always 1 / C(m1+m2, m1).
Rational urn_path_weight(const PlanePath& path);

// Probability of a wedge path under the card process with mirroring: strict
// majority states draw with the remaining-count ratios, tie states move to
// (j, j-1) with probability 1. Throws DomainError off the wedge.
Rational card_path_weight(const PlanePath& path);

// All paths from (m1, m2) to the origin, in lexicographic step order.
std::vector<PlanePath> all_paths(const DeckComposition& deck, int cap = kDefaultUrnCap);
std::vector<PlanePath> wedge_paths(const DeckComposition& deck, int cap = kDefaultUrnCap);

// Exact law of the urn equality count G_{m1,m2}; weights are built
// incrementally and their total is checked against 1.
DiscretePMF urn_equality_dist(const DeckComposition& deck, int cap = kDefaultUrnCap);

// Exact law of returns to zero under the uniform measure on walks of length
// n with final altitude h.
DiscretePMF dyck_return_dist(int n, int final_altitude, int cap = kDefaultDyckCap);

struct MirrorFiberReport {
  int full_paths = 0;
  int wedge_paths = 0;
  bool surjective = true;           // every wedge path has a preimage
  bool idempotent = true;           // psi(psi(x)) = psi(x)
  bool preserves_visits = true;     // G(psi(x)) = G(x)
  bool fiber_sizes = true;          // |psi^{-1}(w)| = 2^G(w)
  bool preimage_weights = true;     // each preimage weighs 2^{-G} card(w)
  bool fiber_weight_sums = true;    // fiber total equals card(w)

  bool ok() const {
    return surjective && idempotent && preserves_visits && fiber_sizes && preimage_weights &&
           fiber_weight_sums;
  }
};

MirrorFiberReport mirror_fiber_check(const DeckComposition& deck, int cap = kDefaultUrnCap);

}  // namespace cardguess
