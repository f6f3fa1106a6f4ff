#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cardguess/rational.hpp"

namespace cardguess {

// Finite exact probability mass function on the integers. Zero masses are
// dropped on construction, negative masses are rejected.
class DiscretePMF {
 public:
  DiscretePMF() = default;
  explicit DiscretePMF(std::map<std::int64_t, Rational> masses);

  static DiscretePMF point_mass(std::int64_t at);

  // Mass at `value`, zero outside the support.
  Rational mass(std::int64_t value) const;
  std::vector<std::int64_t> support() const;
  const std::map<std::int64_t, Rational>& masses() const { return masses_; }
  bool empty() const { return masses_.empty(); }

  Rational total() const;
  Rational mean() const;
  // P{X <= value}
  Rational cdf(std::int64_t value) const;

  // Law of X + offset.
  DiscretePMF shifted(std::int64_t offset) const;
  // Law of c - X.
  DiscretePMF reflected(std::int64_t c) const;

  friend bool operator==(const DiscretePMF&, const DiscretePMF&) = default;

 private:
  std::map<std::int64_t, Rational> masses_;
};

using JointKey = std::pair<int, int>;

// Finite exact joint law of an integer pair, iterated lexicographically.
class JointPMF {
 public:
  JointPMF() = default;
  explicit JointPMF(std::map<JointKey, Rational> masses);

  Rational mass(int first, int second) const;
  const std::map<JointKey, Rational>& masses() const { return masses_; }
  Rational total() const;

  DiscretePMF first_marginal() const;
  DiscretePMF second_marginal() const;

  friend bool operator==(const JointPMF&, const JointPMF&) = default;

 private:
  std::map<JointKey, Rational> masses_;
};

}  // namespace cardguess
