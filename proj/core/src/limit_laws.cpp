#include "cardguess/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cardguess/errors.hpp"
#include "cardguess/exact.hpp"

namespace cardguess {

namespace {

struct FamilyName {
  RegimeFamily family;
  const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {RegimeFamily::TFixedM2, "T-fixed-m2"},
    {RegimeFamily::TSublinear, "T-sublinear"},
    {RegimeFamily::TLinear, "T-linear"},
    {RegimeFamily::WSublinear, "W-sublinear"},
    {RegimeFamily::WLinear, "W-linear"},
    {RegimeFamily::WNearDiagonalLargeD, "W-near-diagonal-large-d"},
    {RegimeFamily::WNearDiagonalAlpha, "W-near-diagonal-alpha"},
    {RegimeFamily::WNearDiagonalSmallD, "W-near-diagonal-small-d"},
    {RegimeFamily::JointCentral, "joint-central"},
};

void require_open_unit(double rho, const char* what) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError(std::string(what) + ": rho must lie in (0, 1)");
}

std::string format_parameter(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace

RegimeSpec RegimeSpec::t_fixed_m2(int m2) {
  if (m2 < 1) throw DomainError("T-fixed-m2: m2 must be >= 1");
  RegimeSpec r(RegimeFamily::TFixedM2);
  r.fixed_m2_ = m2;
  return r;
}

RegimeSpec RegimeSpec::t_sublinear() { return RegimeSpec(RegimeFamily::TSublinear); }

RegimeSpec RegimeSpec::t_linear(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("T-linear: rho must lie in (0, 1]");
  RegimeSpec r(RegimeFamily::TLinear);
  r.rho_ = rho;
  return r;
}

RegimeSpec RegimeSpec::w_sublinear() { return RegimeSpec(RegimeFamily::WSublinear); }

RegimeSpec RegimeSpec::w_linear(double rho) {
  require_open_unit(rho, "W-linear");
  RegimeSpec r(RegimeFamily::WLinear);
  r.rho_ = rho;
  return r;
}

RegimeSpec RegimeSpec::w_large_difference() {
  return RegimeSpec(RegimeFamily::WNearDiagonalLargeD);
}

RegimeSpec RegimeSpec::w_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("W-near-diagonal-alpha: alpha must be > 0");
  RegimeSpec r(RegimeFamily::WNearDiagonalAlpha);
  r.alpha_ = alpha;
  return r;
}

RegimeSpec RegimeSpec::w_small_difference() {
  return RegimeSpec(RegimeFamily::WNearDiagonalSmallD);
}

RegimeSpec RegimeSpec::joint_central(double rho) {
  require_open_unit(rho, "joint-central");
  RegimeSpec r(RegimeFamily::JointCentral);
  r.rho_ = rho;
  return r;
}

RegimeSpec RegimeSpec::from_name(const std::string& name, std::optional<double> rho,
                                 std::optional<double> alpha, std::optional<int> fixed_m2) {
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const FamilyName& f) { return name == f.name; });
  if (it == std::end(kFamilyNames)) throw DomainError("unknown regime '" + name + "'");

  const bool wants_rho = it->family == RegimeFamily::TLinear ||
                         it->family == RegimeFamily::WLinear ||
                         it->family == RegimeFamily::JointCentral;
  const bool wants_alpha = it->family == RegimeFamily::WNearDiagonalAlpha;
  const bool wants_m2 = it->family == RegimeFamily::TFixedM2;
  if (wants_rho != rho.has_value())
    throw DomainError(name + (wants_rho ? " requires rho" : " takes no rho"));
  if (wants_alpha != alpha.has_value())
    throw DomainError(name + (wants_alpha ? " requires alpha" : " takes no alpha"));
  if (wants_m2 != fixed_m2.has_value())
    throw DomainError(name + (wants_m2 ? " requires a fixed m2" : " takes no fixed m2"));

  switch (it->family) {
    case RegimeFamily::TFixedM2: return t_fixed_m2(*fixed_m2);
    case RegimeFamily::TSublinear: return t_sublinear();
    case RegimeFamily::TLinear: return t_linear(*rho);
    case RegimeFamily::WSublinear: return w_sublinear();
    case RegimeFamily::WLinear: return w_linear(*rho);
    case RegimeFamily::WNearDiagonalLargeD: return w_large_difference();
    case RegimeFamily::WNearDiagonalAlpha: return w_alpha(*alpha);
    case RegimeFamily::WNearDiagonalSmallD: return w_small_difference();
    case RegimeFamily::JointCentral: return joint_central(*rho);
  }
  throw DomainError("unknown regime");
}

std::string RegimeSpec::name() const {
  for (const auto& f : kFamilyNames)
    if (f.family == family_) return f.name;
  return "unknown";
}

bool RegimeSpec::about_T() const {
  return family_ == RegimeFamily::TFixedM2 || family_ == RegimeFamily::TSublinear ||
         family_ == RegimeFamily::TLinear;
}

std::vector<std::string> regime_names() {
  std::vector<std::string> out;
  for (const auto& f : kFamilyNames) out.emplace_back(f.name);
  return out;
}

LimitLaw limit_law(const RegimeSpec& regime) {
  LimitLaw law;
  switch (regime.family()) {
    case RegimeFamily::TFixedM2: {
      const int m2 = *regime.fixed_m2();
      law.cdf = [m2](double y) {
        if (y <= 0.0) return 0.0;
        if (y >= 1.0) return 1.0;
        return 1.0 - std::pow(1.0 - y, m2);
      };
      law.description = "Beta(1, " + std::to_string(m2) + ")";
      break;
    }
    case RegimeFamily::TSublinear:
      law.cdf = [](double y) { return y <= 0.0 ? 0.0 : -std::expm1(-y); };
      law.description = "Exp(1)";
      break;
    case RegimeFamily::TLinear: {
      const double rho = *regime.rho();
      // p_l = (rho + rho^l) / (1 + rho)^{l+1}, l >= 1
      law.pmf = [rho](std::int64_t l) {
        if (l < 1) return 0.0;
        return (rho + std::pow(rho, static_cast<double>(l))) /
               std::pow(1.0 + rho, static_cast<double>(l + 1));
      };
      law.cdf = [rho](double x) {
        if (x < 1.0) return 0.0;
        const double l = std::floor(x);
        const double a = std::pow(1.0 / (1.0 + rho), l);
        const double b = std::pow(rho / (1.0 + rho), l);
        return (1.0 - a + rho * (1.0 - b)) / (1.0 + rho);
      };
      law.description = "geometric mixture, rho=" + format_parameter(rho);
      break;
    }
    case RegimeFamily::WSublinear:
      law.pmf = [](std::int64_t k) { return k == 0 ? 1.0 : 0.0; };
      law.cdf = [](double x) { return x < 0.0 ? 0.0 : 1.0; };
      law.description = "point mass at 0";
      break;
    case RegimeFamily::WLinear: {
      const double rho = *regime.rho();
      const double success = (1.0 - rho) / (1.0 + rho);
      const double ratio = 2.0 * rho / (1.0 + rho);
      law.pmf = [success, ratio](std::int64_t k) {
        return k < 0 ? 0.0 : success * std::pow(ratio, static_cast<double>(k));
      };
      law.cdf = [ratio](double x) {
        return x < 0.0 ? 0.0 : 1.0 - std::pow(ratio, std::floor(x) + 1.0);
      };
      law.description = "Geom(" + format_parameter(success) + ") - 1";
      break;
    }
    case RegimeFamily::WNearDiagonalLargeD:
      law.cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x / 2.0); };
      law.description = "Exp(1/2)";
      break;
    case RegimeFamily::WNearDiagonalAlpha: {
      const double alpha = *regime.alpha();
      law.cdf = [alpha](double x) { return linexp_cdf(alpha / 2.0, 0.5, x); };
      law.description = "LinExp(" + format_parameter(alpha / 2.0) + ", 1/2)";
      break;
    }
    case RegimeFamily::WNearDiagonalSmallD:
      law.cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x * x / 4.0); };
      law.description = "Rayleigh(sqrt 2)";
      break;
    case RegimeFamily::JointCentral:
      throw DomainError("joint-central is a bivariate law; use joint_limit_pmf");
  }
  return law;
}

double joint_limit_pmf(double rho, std::int64_t k, std::int64_t l) {
  require_open_unit(rho, "joint_limit_pmf");
  if (k < 0 || l < 1) return 0.0;
  const double lf = static_cast<double>(l);
  if (k == 0) return (rho - std::pow(rho, lf)) / std::pow(1.0 + rho, lf + 1.0);
  return (1.0 - rho) / (rho * (1.0 + rho)) * std::pow(rho / (1.0 + rho), lf) *
         std::pow(2.0 * rho / (1.0 + rho), static_cast<double>(k));
}

double linexp_cdf(double lambda, double nu, double x) {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-(lambda * x + nu * x * x / 2.0));
}

double linexp_from_exponential(double lambda, double nu, double z) {
  if (!(nu > 0.0)) throw DomainError("LinExp representation needs nu > 0");
  return -lambda / nu + std::sqrt(lambda * lambda + 2.0 * nu * z) / nu;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    worst = std::max({worst, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return worst;
}

RegimeDiagnostics regime_diagnostics(const DeckComposition& deck) {
  if (deck.m1() < 1) throw DomainError("regime diagnostics need m1 >= 1");
  const double m1 = deck.m1();
  const double d = deck.difference();
  return {deck.m2() / m1, d / std::sqrt(m1), d / m1};
}

namespace {

void require_consistent(const DeckComposition& deck, const RegimeSpec& regime) {
  if (deck.m1() < 1) throw DomainError("limit regimes need m1 >= 1");
  const auto fail = [&](const std::string& why) {
    throw DomainError(regime.name() + " does not fit deck (" + std::to_string(deck.m1()) + ", " +
                      std::to_string(deck.m2()) + "): " + why);
  };
  switch (regime.family()) {
    case RegimeFamily::TFixedM2:
      if (deck.m2() != *regime.fixed_m2()) fail("m2 differs from the regime's fixed m2");
      break;
    case RegimeFamily::TSublinear:
    case RegimeFamily::TLinear:
      if (deck.m2() < 1) fail("needs m2 >= 1");
      break;
    case RegimeFamily::WLinear:
    case RegimeFamily::JointCentral:
      if (deck.m2() < 1 || deck.difference() < 1) fail("needs 1 <= m2 < m1");
      break;
    case RegimeFamily::WNearDiagonalLargeD:
    case RegimeFamily::WNearDiagonalAlpha:
      if (deck.difference() < 1) fail("needs d = m1 - m2 >= 1");
      break;
    case RegimeFamily::WSublinear:
    case RegimeFamily::WNearDiagonalSmallD:
      break;
  }
}

CommonDenominatorLaw regime_variable_law(const DeckComposition& deck, const RegimeSpec& regime) {
  return regime.about_T() ? marginal_T_weights(deck) : marginal_W_weights(deck);
}

}  // namespace

double regime_scale(const DeckComposition& deck, const RegimeSpec& regime) {
  require_consistent(deck, regime);
  const double m1 = deck.m1();
  switch (regime.family()) {
    case RegimeFamily::TFixedM2: return 1.0 / m1;
    case RegimeFamily::TSublinear: return deck.m2() / m1;
    case RegimeFamily::WNearDiagonalLargeD: return deck.difference() / m1;
    case RegimeFamily::WNearDiagonalAlpha:
    case RegimeFamily::WNearDiagonalSmallD: return 1.0 / std::sqrt(m1);
    case RegimeFamily::TLinear:
    case RegimeFamily::WSublinear:
    case RegimeFamily::WLinear: return 1.0;
    case RegimeFamily::JointCentral: break;
  }
  throw DomainError("joint-central has no scalar rescaling");
}

Rational scaled_exact_cdf(const DeckComposition& deck, const RegimeSpec& regime, double x) {
  const double scale = regime_scale(deck, regime);
  if (!std::isfinite(x)) throw DomainError("scaled_exact_cdf: x must be finite");
  // Largest integer v with scale * v <= x.
  double v = std::floor(x / scale);
  while (scale * (v + 1.0) <= x) v += 1.0;
  while (scale * v > x) v -= 1.0;
  const auto law = regime_variable_law(deck, regime);
  const double last = static_cast<double>(law.first) + static_cast<double>(law.weights.size()) - 1;
  if (v < static_cast<double>(law.first)) return 0;
  if (v >= last) return 1;
  Integer cumulative = 0;
  const auto count = static_cast<std::size_t>(v - static_cast<double>(law.first)) + 1;
  for (std::size_t i = 0; i < count; ++i) cumulative += law.weights[i];
  Rational result(cumulative, law.denominator);
  result.canonicalize();
  return result;
}

namespace {

double joint_central_distance(const DeckComposition& deck, double rho) {
  const Integer denominator = binomial(deck.total(), deck.m1());
  double absolute = 0.0;
  double covered = 0.0;
  for_each_joint_numerator(deck, [&](int k, int l, const Integer& numerator) {
    const double limit = joint_limit_pmf(rho, k, l);
    absolute += std::abs(ratio_to_double(numerator, denominator) - limit);
    covered += limit;
  });
  return 0.5 * (absolute + std::max(0.0, 1.0 - covered));
}

}  // namespace

double convergence_distance(const DeckComposition& deck, const RegimeSpec& regime) {
  require_consistent(deck, regime);
  if (regime.family() == RegimeFamily::JointCentral)
    return joint_central_distance(deck, *regime.rho());

  const LimitLaw law = limit_law(regime);
  const auto exact = regime_variable_law(deck, regime);

  if (law.discrete()) {
    // Total variation over the exact support plus the limit's mass elsewhere.
    const auto& pmf = *law.pmf;
    double absolute = 0.0;
    double covered = 0.0;
    for (std::size_t i = 0; i < exact.weights.size(); ++i) {
      const auto value = exact.first + static_cast<std::int64_t>(i);
      const double limit = pmf(value);
      absolute += std::abs(ratio_to_double(exact.weights[i], exact.denominator) - limit);
      covered += limit;
    }
    return 0.5 * (absolute + std::max(0.0, 1.0 - covered));
  }

  // Continuous limit: the supremum is attained at a jump, on one side or the other.
  const double scale = regime_scale(deck, regime);
  Integer cumulative = 0;
  double before = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < exact.weights.size(); ++i) {
    if (exact.weights[i] == 0) continue;
    cumulative += exact.weights[i];
    const double after = ratio_to_double(cumulative, exact.denominator);
    const double x = scale * static_cast<double>(exact.first + static_cast<std::int64_t>(i));
    const double limit = law.cdf(x);
    worst = std::max({worst, std::abs(limit - before), std::abs(limit - after)});
    before = after;
  }
  return worst;
}

double independence_distance(const DeckComposition& deck) {
  const auto w_law = marginal_W_weights(deck);
  const auto t_law = marginal_T_weights(deck);
  std::vector<double> w(w_law.weights.size());
  std::vector<double> t(t_law.weights.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = ratio_to_double(w_law.weights[i], w_law.denominator);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = ratio_to_double(t_law.weights[i], t_law.denominator);
  const auto product = [&](int k, int l) {
    const auto ki = k - w_law.first;
    const auto li = l - t_law.first;
    if (ki < 0 || li < 0 || ki >= static_cast<std::int64_t>(w.size()) ||
        li >= static_cast<std::int64_t>(t.size()))
      return 0.0;
    return w[ki] * t[li];
  };

  const Integer denominator = binomial(deck.total(), deck.m1());
  double absolute = 0.0;
  double covered = 0.0;
  for_each_joint_numerator(deck, [&](int k, int l, const Integer& numerator) {
    const double q = product(k, l);
    absolute += std::abs(ratio_to_double(numerator, denominator) - q);
    covered += q;
  });
  return 0.5 * (absolute + std::max(0.0, 1.0 - covered));
}

}  // namespace cardguess
