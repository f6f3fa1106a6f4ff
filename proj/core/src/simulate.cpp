#include "cardguess/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "cardguess/errors.hpp"

namespace cardguess {

GuessCounts simulate_deck(const DeckComposition& deck, Philox4x64& rng) {
  GuessCounts g;
  std::uint64_t a = deck.m1();
  std::uint64_t b = deck.m2();
  while (a > 0) {
    if (b == 0) {
      g.t += static_cast<int>(a);
      break;
    }
    if (a > b) {
      if (rng.uniform_below(a + b) < a) {
        ++g.l;
        --a;
      } else {
        --b;
      }
    } else {
      ++g.w;
      const bool guess = rng.coin();
      const bool drawn = rng.uniform_below(2 * a) < a;
      if (guess == drawn) ++g.p;
      b = a - 1;  // either colour leaves (a, a-1) up to relabelling
    }
  }
  g.c = g.t + g.l + g.p;
  return g;
}

namespace {

template <class Projection>
std::map<std::int64_t, std::uint64_t> project(const CountTable& table, Projection f) {
  std::map<std::int64_t, std::uint64_t> out;
  for (const auto& [g, n] : table) out[f(g)] += n;
  return out;
}

// Upper bound on distinct (t, l, p, w, c) tuples: t determines l, c is
// determined by the rest, and 0 <= p <= w <= m2.
std::uint64_t distinct_tuple_bound(const DeckComposition& deck) {
  const std::uint64_t m1 = deck.m1();
  const std::uint64_t m2 = deck.m2();
  return (m1 + 1) * (m2 + 1) * (m2 + 2) / 2;
}

constexpr std::size_t kBytesPerTableEntry = 96;

}  // namespace

std::map<std::int64_t, std::uint64_t> SimulationResult::counts_T() const {
  return project(table, [](const GuessCounts& g) { return g.t; });
}
std::map<std::int64_t, std::uint64_t> SimulationResult::counts_L() const {
  return project(table, [](const GuessCounts& g) { return g.l; });
}
std::map<std::int64_t, std::uint64_t> SimulationResult::counts_P() const {
  return project(table, [](const GuessCounts& g) { return g.p; });
}
std::map<std::int64_t, std::uint64_t> SimulationResult::counts_W() const {
  return project(table, [](const GuessCounts& g) { return g.w; });
}
std::map<std::int64_t, std::uint64_t> SimulationResult::counts_C() const {
  return project(table, [](const GuessCounts& g) { return g.c; });
}

std::map<std::pair<int, int>, std::uint64_t> SimulationResult::counts_WT() const {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [g, n] : table) out[{g.w, g.t}] += n;
  return out;
}

SimulationResult::Means SimulationResult::means() const {
  long double t = 0, l = 0, p = 0, w = 0, c = 0;
  for (const auto& [g, n] : table) {
    t += static_cast<long double>(g.t) * n;
    l += static_cast<long double>(g.l) * n;
    p += static_cast<long double>(g.p) * n;
    w += static_cast<long double>(g.w) * n;
    c += static_cast<long double>(g.c) * n;
  }
  const long double total = trials;
  return {static_cast<double>(t / total), static_cast<double>(l / total),
          static_cast<double>(p / total), static_cast<double>(w / total),
          static_cast<double>(c / total)};
}

SimulationResult simulate_many(const SimulationConfig& config) {
  if (config.trials < 1) throw DomainError("trials must be >= 1");
  if (config.streams < 1) throw DomainError("stream count must be >= 1");
  if (config.trials > kMaxSimulationTrials)
    throw ResourceLimitError("trials exceed the hard limit of " +
                             std::to_string(kMaxSimulationTrials));
  const std::uint64_t entries =
      std::min(config.trials, distinct_tuple_bound(config.deck)) * config.streams;
  if (entries > config.memory_budget / kBytesPerTableEntry)
    throw ResourceLimitError("count tables could exceed the memory budget of " +
                             std::to_string(config.memory_budget) + " bytes");

  const std::uint32_t streams = config.streams;
  std::vector<CountTable> tables(streams);
  std::vector<char> ok(streams, 1);
  const auto run_stream = [&](std::uint32_t s) {
    std::uint64_t n = config.trials / streams + (s < config.trials % streams ? 1 : 0);
    Philox4x64 rng(config.seed, s);
    auto& table = tables[s];
    for (; n > 0; --n) {
      const GuessCounts g = simulate_deck(config.deck, rng);
      if (!satisfies_invariants(g, config.deck)) ok[s] = 0;
      ++table[g];
    }
  };

  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, streams);
  if (threads == 1) {
    for (std::uint32_t s = 0; s < streams; ++s) run_stream(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint32_t s = t; s < streams; s += threads) run_stream(s);
      });
    for (auto& th : pool) th.join();
  }

  SimulationResult result{config.deck, config.trials, {}, true};
  for (std::uint32_t s = 0; s < streams; ++s) {
    for (const auto& [g, n] : tables[s]) result.table[g] += n;
    result.invariants_held = result.invariants_held && ok[s];
  }
  return result;
}

ChiSquareResult chi_square_gof(const std::map<std::int64_t, std::uint64_t>& observed,
                               const DiscretePMF& expected, double min_expected) {
  std::uint64_t n = 0;
  for (const auto& [v, c] : observed) n += c;
  if (n == 0) throw DomainError("chi-square test needs at least one observation");

  ChiSquareResult out;
  for (const auto& [v, c] : observed) {
    if (c > 0 && expected.mass(v) == 0) {
      out.statistic = std::numeric_limits<double>::infinity();
      out.p_value = 0.0;
      return out;
    }
  }

  struct Bin {
    double expected = 0;
    double observed = 0;
  };
  std::vector<Bin> bins;
  Bin current;
  for (const auto& [v, q] : expected.masses()) {
    current.expected += to_double(q) * static_cast<double>(n);
    if (auto it = observed.find(v); it != observed.end()) current.observed += it->second;
    if (current.expected >= min_expected) {
      bins.push_back(current);
      current = {};
    }
  }
  if (current.expected > 0 || current.observed > 0) {
    if (bins.empty()) {
      bins.push_back(current);
    } else {
      bins.back().expected += current.expected;
      bins.back().observed += current.observed;
    }
  }

  out.bins = static_cast<int>(bins.size());
  out.degrees_of_freedom = out.bins - 1;
  for (const auto& b : bins) {
    const double diff = b.observed - b.expected;
    out.statistic += diff * diff / b.expected;
  }
  if (out.degrees_of_freedom < 1) {
    out.p_value = 1.0;
    return out;
  }
  const boost::math::chi_squared dist(out.degrees_of_freedom);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

double empirical_tv(const std::map<std::pair<int, int>, std::uint64_t>& observed,
                    const JointPMF& expected) {
  std::uint64_t n = 0;
  for (const auto& [k, c] : observed) n += c;
  if (n == 0) throw DomainError("empirical_tv needs at least one observation");
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, c] : observed) keys.insert(k);
  for (const auto& [k, q] : expected.masses()) keys.insert(k);
  double sum = 0;
  for (const auto& key : keys) {
    const auto it = observed.find(key);
    const double f = it == observed.end() ? 0.0 : static_cast<double>(it->second) / n;
    sum += std::abs(f - to_double(expected.mass(key.first, key.second)));
  }
  return 0.5 * sum;
}

}  // namespace cardguess
