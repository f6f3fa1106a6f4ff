#pragma once

// Monte Carlo play-throughs of the majority-guessing game.

#include <cstddef>
#include <cstdint>
#include <map>

#include "cardguess/deck.hpp"
#include "cardguess/guess_counts.hpp"
#include "cardguess/pmf.hpp"
#include "cardguess/rng.hpp"

namespace cardguess {

inline constexpr std::size_t kDefaultSimulationMemoryBudget = std::size_t{256} << 20;
inline constexpr std::uint64_t kMaxSimulationTrials = 10'000'000'000ULL;

struct SimulationConfig {
  DeckComposition deck;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint32_t streams = 1;
  // 0 picks std::thread::hardware_concurrency(); never affects the results.
  unsigned threads = 0;
  std::size_t memory_budget = kDefaultSimulationMemoryBudget;
};

// One realization; `rng` advances.
GuessCounts simulate_deck(const DeckComposition& deck, Philox4x64& rng);

using CountTable = std::map<GuessCounts, std::uint64_t>;

struct SimulationResult {
  DeckComposition deck;
  std::uint64_t trials = 0;
  CountTable table;
  // Every sampled tuple satisfied the GuessCounts invariants.
  bool invariants_held = true;

  std::map<std::int64_t, std::uint64_t> counts_T() const;
  std::map<std::int64_t, std::uint64_t> counts_L() const;
  std::map<std::int64_t, std::uint64_t> counts_P() const;
  std::map<std::int64_t, std::uint64_t> counts_W() const;
  std::map<std::int64_t, std::uint64_t> counts_C() const;
  std::map<std::pair<int, int>, std::uint64_t> counts_WT() const;

  struct Means {
    double t, l, p, w, c;
  };
  Means means() const;
};

// Trials are split over `streams` substreams (key [seed, index]), the first
// trials % streams streams taking one extra trial. Throws ResourceLimitError
// when the count table could exceed the memory budget or trials exceed
// kMaxSimulationTrials.
SimulationResult simulate_many(const SimulationConfig& config);

struct ChiSquareResult {
  double statistic = 0;
  int degrees_of_freedom = 0;
  double p_value = 1;
  int bins = 0;
};

// Pearson goodness of fit of observed counts against an exact law. Adjacent
// support points are pooled until every bin expects at least `min_expected`
// observations. Observations outside the exact support give p = 0.
ChiSquareResult chi_square_gof(const std::map<std::int64_t, std::uint64_t>& observed,
                               const DiscretePMF& expected, double min_expected = 5.0);

// Total variation distance between empirical frequencies and an exact joint law.
double empirical_tv(const std::map<std::pair<int, int>, std::uint64_t>& observed,
                    const JointPMF& expected);

}  // namespace cardguess
