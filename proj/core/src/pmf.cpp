#include "cardguess/pmf.hpp"

#include "cardguess/errors.hpp"

namespace cardguess {

DiscretePMF::DiscretePMF(std::map<std::int64_t, Rational> masses) {
  for (auto& [value, mass] : masses) {
    if (sgn(mass) < 0) throw DomainError("negative probability mass");
    if (sgn(mass) != 0) masses_.emplace(value, std::move(mass));
  }
}

DiscretePMF DiscretePMF::point_mass(std::int64_t at) {
  return DiscretePMF({{at, Rational(1)}});
}

Rational DiscretePMF::mass(std::int64_t value) const {
  auto it = masses_.find(value);
  return it == masses_.end() ? Rational(0) : it->second;
}

std::vector<std::int64_t> DiscretePMF::support() const {
  std::vector<std::int64_t> out;
  out.reserve(masses_.size());
  for (const auto& entry : masses_) out.push_back(entry.first);
  return out;
}

Rational DiscretePMF::total() const {
  Rational sum = 0;
  for (const auto& entry : masses_) sum += entry.second;
  return sum;
}

Rational DiscretePMF::mean() const {
  Rational sum = 0;
  for (const auto& [value, mass] : masses_) sum += mass * Rational(Integer(static_cast<long>(value)));
  return sum;
}

Rational DiscretePMF::cdf(std::int64_t value) const {
  Rational sum = 0;
  for (auto it = masses_.begin(); it != masses_.end() && it->first <= value; ++it)
    sum += it->second;
  return sum;
}

DiscretePMF DiscretePMF::shifted(std::int64_t offset) const {
  std::map<std::int64_t, Rational> out;
  for (const auto& [value, mass] : masses_) out.emplace(value + offset, mass);
  return DiscretePMF(std::move(out));
}

DiscretePMF DiscretePMF::reflected(std::int64_t c) const {
  std::map<std::int64_t, Rational> out;
  for (const auto& [value, mass] : masses_) out.emplace(c - value, mass);
  return DiscretePMF(std::move(out));
}

JointPMF::JointPMF(std::map<JointKey, Rational> masses) {
  for (auto& [key, mass] : masses) {
    if (sgn(mass) < 0) throw DomainError("negative probability mass");
    if (sgn(mass) != 0) masses_.emplace(key, std::move(mass));
  }
}

Rational JointPMF::mass(int first, int second) const {
  auto it = masses_.find({first, second});
  return it == masses_.end() ? Rational(0) : it->second;
}

Rational JointPMF::total() const {
  Rational sum = 0;
  for (const auto& entry : masses_) sum += entry.second;
  return sum;
}

DiscretePMF JointPMF::first_marginal() const {
  std::map<std::int64_t, Rational> out;
  for (const auto& [key, mass] : masses_) out[key.first] += mass;
  return DiscretePMF(std::move(out));
}

DiscretePMF JointPMF::second_marginal() const {
  std::map<std::int64_t, Rational> out;
  for (const auto& [key, mass] : masses_) out[key.second] += mass;
  return DiscretePMF(std::move(out));
}

}  // namespace cardguess
