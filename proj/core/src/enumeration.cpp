#include "cardguess/enumeration.hpp"

#include <cstdint>
#include <future>
#include <string>
#include <vector>

#include "cardguess/errors.hpp"

namespace cardguess {

bool satisfies_invariants(const GuessCounts& g, const DeckComposition& deck) {
  return g.c == g.t + g.l + g.p && g.t + g.l == deck.m1() && 0 <= g.p && g.p <= g.w &&
         g.w <= deck.m2() && deck.m1() <= g.c && g.c <= deck.total();
}

namespace {

// Leaf weights are 1 / (C(M, m1) * 2^w); scaling by 2^m2 keeps every
// accumulated count an integer.
using ScaledCounts = std::map<GuessCounts, std::uint64_t>;

struct Walker {
  int m2;
  ScaledCounts counts;

  // red/black: cards of each colour still in the deck (red = majority at start).
  void walk(int red, int black, GuessCounts g) {
    if (red == 0 && black == 0) {
      g.c = g.t + g.l + g.p;
      counts[g] += std::uint64_t{1} << (m2 - g.w);
      return;
    }
    if (red == 0 || black == 0) {
      ++g.t;
      walk(red == 0 ? 0 : red - 1, black == 0 ? 0 : black - 1, g);
      return;
    }
    if (red == black) {
      ++g.w;
      for (int colour = 0; colour < 2; ++colour) {
        const int next_red = colour == 0 ? red - 1 : red;
        const int next_black = colour == 0 ? black : black - 1;
        GuessCounts hit = g;
        ++hit.p;
        walk(next_red, next_black, hit);  // coin named the drawn colour
        walk(next_red, next_black, g);    // coin named the other colour
      }
      return;
    }
    const bool red_majority = red > black;
    GuessCounts correct = g;
    ++correct.l;
    walk(red - 1, black, red_majority ? correct : g);
    walk(red, black - 1, red_majority ? g : correct);
  }
};

void merge(ScaledCounts& into, const ScaledCounts& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

}  // namespace

CounterLaw enumerate_decks(const DeckComposition& deck, int cap) {
  if (cap > kHardEnumerationCap)
    throw ResourceLimitError("enumeration cap " + std::to_string(cap) + " exceeds hard limit " +
                             std::to_string(kHardEnumerationCap));
  if (deck.total() > cap)
    throw ResourceLimitError("deck of " + std::to_string(deck.total()) +
                             " cards exceeds enumeration cap " + std::to_string(cap));

  const int m1 = deck.m1();
  const int m2 = deck.m2();
  ScaledCounts counts;

  // Large decks: the two first-card branches run concurrently. Coin
  // branching only happens at ties, so a non-tie first state splits cleanly.
  if (deck.total() >= 16 && m1 > m2 && m2 > 0) {
    auto run = [m2](int red, int black, GuessCounts g) {
      Walker walker{m2, {}};
      walker.walk(red, black, g);
      return std::move(walker.counts);
    };
    GuessCounts majority_drawn;
    majority_drawn.l = 1;
    auto left = std::async(std::launch::async, run, m1 - 1, m2, majority_drawn);
    ScaledCounts right = run(m1, m2 - 1, GuessCounts{});
    counts = left.get();
    merge(counts, right);
  } else {
    Walker walker{m2, {}};
    walker.walk(m1, m2, GuessCounts{});
    counts = std::move(walker.counts);
  }

  const Integer denominator = binomial(deck.total(), m1) * pow2(m2);
  CounterLaw law;
  for (const auto& [key, count] : counts) {
    Rational q(Integer(static_cast<unsigned long>(count)), denominator);
    q.canonicalize();
    law.emplace(key, q);
  }
  return law;
}

namespace {

template <typename Project>
DiscretePMF project(const CounterLaw& law, Project field) {
  std::map<std::int64_t, Rational> out;
  for (const auto& [g, mass] : law) out[field(g)] += mass;
  return DiscretePMF(std::move(out));
}

}  // namespace

JointPMF counter_law_WT(const CounterLaw& law) {
  std::map<JointKey, Rational> out;
  for (const auto& [g, mass] : law) out[{g.w, g.t}] += mass;
  return JointPMF(std::move(out));
}

DiscretePMF counter_law_T(const CounterLaw& law) {
  return project(law, [](const GuessCounts& g) { return g.t; });
}
DiscretePMF counter_law_L(const CounterLaw& law) {
  return project(law, [](const GuessCounts& g) { return g.l; });
}
DiscretePMF counter_law_P(const CounterLaw& law) {
  return project(law, [](const GuessCounts& g) { return g.p; });
}
DiscretePMF counter_law_W(const CounterLaw& law) {
  return project(law, [](const GuessCounts& g) { return g.w; });
}
DiscretePMF counter_law_C(const CounterLaw& law) {
  return project(law, [](const GuessCounts& g) { return g.c; });
}

}  // namespace cardguess
