#include "cardguess/models.hpp"

#include <future>
#include <map>
#include <string>

#include "cardguess/errors.hpp"

namespace cardguess {

namespace {

void require_cap(int size, int cap, const char* what) {
  if (cap < 0 || cap > kHardModelCap)
    throw ResourceLimitError(std::string(what) + ": cap must lie in [0, " +
                             std::to_string(kHardModelCap) + "]");
  if (size > cap)
    throw ResourceLimitError(std::string(what) + ": size " + std::to_string(size) +
                             " exceeds the cap " + std::to_string(cap));
}

Rational ratio(std::int64_t num, std::int64_t den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

template <class Visit>
void enumerate_steps(int left, int down, std::vector<Step>& prefix, const Visit& visit) {
  if (left == 0 && down == 0) {
    visit(prefix);
    return;
  }
  if (left > 0) {
    prefix.push_back(Step::Left);
    enumerate_steps(left - 1, down, prefix, visit);
    prefix.pop_back();
  }
  if (down > 0) {
    prefix.push_back(Step::Down);
    enumerate_steps(left, down - 1, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

PlanePath::PlanePath(DeckComposition start, std::vector<Step> steps)
    : start_(start), steps_(std::move(steps)) {
  int left = 0;
  for (Step s : steps_) left += s == Step::Left;
  const int down = static_cast<int>(steps_.size()) - left;
  if (left != start_.m1() || down != start_.m2())
    throw DomainError("path from (" + std::to_string(start_.m1()) + ", " +
                      std::to_string(start_.m2()) + ") needs exactly m1 left and m2 down steps");
}

std::vector<std::pair<int, int>> PlanePath::states() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(steps_.size() + 1);
  int x = start_.m1();
  int y = start_.m2();
  out.emplace_back(x, y);
  for (Step s : steps_) {
    (s == Step::Left ? x : y) -= 1;
    out.emplace_back(x, y);
  }
  return out;
}

bool PlanePath::in_wedge() const {
  for (const auto& [x, y] : states())
    if (y > x) return false;
  return true;
}

int PlanePath::equality_visits() const {
  int g = 0;
  for (const auto& [x, y] : states()) g += x == y && x >= 1;
  return g;
}

DyckWalk::DyckWalk(std::vector<int> steps) : steps_(std::move(steps)) {
  for (int s : steps_)
    if (s != 1 && s != -1) throw DomainError("walk steps must be +1 or -1");
}

int DyckWalk::final_altitude() const {
  int h = 0;
  for (int s : steps_) h += s;
  return h;
}

int DyckWalk::returns_to_zero() const {
  int h = 0;
  int returns = 0;
  for (int s : steps_) {
    h += s;
    returns += h == 0;
  }
  return returns;
}

DyckWalk deck_to_walk(const PlanePath& path) {
  std::vector<int> walk;
  walk.reserve(path.steps().size());
  for (auto it = path.steps().rbegin(); it != path.steps().rend(); ++it)
    walk.push_back(*it == Step::Down ? 1 : -1);
  return DyckWalk(std::move(walk));
}

PlanePath mirror_map(const PlanePath& path) {
  std::vector<Step> steps = path.steps();
  int x = path.start().m1();
  int y = path.start().m2();
  for (auto& s : steps) {
    (s == Step::Left ? x : y) -= 1;
    // A step ending strictly above the diagonal belongs to an excursion, as
    // does the step that brings it back.
    const bool above_after = y > x;
    const bool returning = x == y && s == Step::Down;
    if (above_after || returning) s = s == Step::Left ? Step::Down : Step::Left;
  }
  return PlanePath(path.start(), std::move(steps));
}

Rational urn_path_weight(const PlanePath& path) {
  Rational weight = 1;
  int x = path.start().m1();
  int y = path.start().m2();
  for (Step s : path.steps()) {
    weight *= ratio(s == Step::Left ? x : y, x + y);
    (s == Step::Left ? x : y) -= 1;
  }
  return weight;
}

Rational card_path_weight(const PlanePath& path) {
  if (!path.in_wedge()) throw DomainError("card process weights are defined on wedge paths only");
  Rational weight = 1;
  int x = path.start().m1();
  int y = path.start().m2();
  for (Step s : path.steps()) {
    if (x != y) weight *= ratio(s == Step::Left ? x : y, x + y);
    (s == Step::Left ? x : y) -= 1;
  }
  return weight;
}

std::vector<PlanePath> all_paths(const DeckComposition& deck, int cap) {
  require_cap(deck.total(), cap, "path enumeration");
  std::vector<PlanePath> out;
  std::vector<Step> prefix;
  enumerate_steps(deck.m1(), deck.m2(), prefix,
                  [&](const std::vector<Step>& steps) { out.emplace_back(deck, steps); });
  return out;
}

std::vector<PlanePath> wedge_paths(const DeckComposition& deck, int cap) {
  std::vector<PlanePath> out;
  for (auto& p : all_paths(deck, cap))
    if (p.in_wedge()) out.push_back(std::move(p));
  return out;
}

namespace {

struct UrnTally {
  std::map<std::int64_t, Rational> law;
  Rational total = 0;
  bool leaves_consistent = true;
};

// Depth-first over the urn states with the running path weight.
void urn_walk(int x, int y, int visits, const Rational& weight, const Rational& leaf_weight,
              UrnTally& tally) {
  if (x == 0 && y == 0) {
    tally.law[visits] += weight;
    tally.total += weight;
    if (weight != leaf_weight) tally.leaves_consistent = false;
    return;
  }
  const auto descend = [&](int nx, int ny, int drawn) {
    const Rational next = weight * ratio(drawn, x + y);
    urn_walk(nx, ny, visits + (nx == ny && nx >= 1), next, leaf_weight, tally);
  };
  if (x > 0) descend(x - 1, y, x);
  if (y > 0) descend(x, y - 1, y);
}

}  // namespace

DiscretePMF urn_equality_dist(const DeckComposition& deck, int cap) {
  require_cap(deck.total(), cap, "urn enumeration");
  const int x = deck.m1();
  const int y = deck.m2();
  const int start_visits = x == y && x >= 1;
  Rational leaf(1);
  leaf /= binomial(deck.total(), deck.m1());

  UrnTally tally;
  if (deck.total() >= 16 && y > 0) {
    // Split on the first draw.
    auto branch = [&](int nx, int ny, int drawn) {
      UrnTally part;
      urn_walk(nx, ny, start_visits + (nx == ny && nx >= 1), ratio(drawn, x + y), leaf, part);
      return part;
    };
    auto first = std::async(std::launch::async, branch, x - 1, y, x);
    UrnTally second = branch(x, y - 1, y);
    UrnTally merged = first.get();
    for (const auto& [v, q] : second.law) merged.law[v] += q;
    merged.total += second.total;
    merged.leaves_consistent = merged.leaves_consistent && second.leaves_consistent;
    tally = std::move(merged);
  } else {
    urn_walk(x, y, start_visits, Rational(1), leaf, tally);
  }
  if (tally.total != 1 || !tally.leaves_consistent)
    throw std::logic_error("urn path weights fail the 1/C(M, m1) checksum");
  return DiscretePMF(std::move(tally.law));
}

DiscretePMF dyck_return_dist(int n, int final_altitude, int cap) {
  if (n < 0) throw DomainError("walk length must be >= 0");
  if (std::abs(final_altitude) > n || (n - final_altitude) % 2 != 0)
    throw DomainError("final altitude must satisfy |h| <= n and h = n (mod 2)");
  require_cap(n, cap, "walk enumeration");
  const int ups = (n + final_altitude) / 2;

  std::map<int, std::uint64_t> counts;
  // Depth-first over (remaining ups, remaining downs, altitude, returns).
  const auto walk = [&](auto&& self, int up, int down, int h, int returns) -> void {
    if (up == 0 && down == 0) {
      ++counts[returns];
      return;
    }
    if (up > 0) self(self, up - 1, down, h + 1, returns + (h + 1 == 0));
    if (down > 0) self(self, up, down - 1, h - 1, returns + (h - 1 == 0));
  };
  walk(walk, ups, n - ups, 0, 0);

  const Integer total = binomial(n, ups);
  std::map<std::int64_t, Rational> law;
  for (const auto& [r, c] : counts) {
    Rational q{Integer(static_cast<unsigned long>(c)), total};
    q.canonicalize();
    law.emplace(r, q);
  }
  return DiscretePMF(std::move(law));
}

MirrorFiberReport mirror_fiber_check(const DeckComposition& deck, int cap) {
  MirrorFiberReport report;
  const auto full = all_paths(deck, cap);
  const auto wedge = wedge_paths(deck, cap);
  report.full_paths = static_cast<int>(full.size());
  report.wedge_paths = static_cast<int>(wedge.size());

  struct Fiber {
    int size = 0;
    Rational weight = 0;
  };
  std::map<std::vector<Step>, Fiber> fibers;
  for (const auto& path : full) {
    const PlanePath image = mirror_map(path);
    if (!image.in_wedge() || mirror_map(image) != image) report.idempotent = false;
    if (image.equality_visits() != path.equality_visits()) report.preserves_visits = false;
    auto& fiber = fibers[image.steps()];
    ++fiber.size;
    const Rational w = urn_path_weight(path);
    fiber.weight += w;
    if (image.in_wedge()) {
      Rational expected = card_path_weight(image);
      expected /= Integer(1) << image.equality_visits();
      if (w != expected) report.preimage_weights = false;
    }
  }

  for (const auto& path : wedge) {
    const auto it = fibers.find(path.steps());
    if (it == fibers.end()) {
      report.surjective = false;
      continue;
    }
    if (it->second.size != (1 << path.equality_visits())) report.fiber_sizes = false;
    if (it->second.weight != card_path_weight(path)) report.fiber_weight_sums = false;
  }
  if (fibers.size() != wedge.size()) report.surjective = false;
  return report;
}

}  // namespace cardguess
