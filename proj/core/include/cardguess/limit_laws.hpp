#pragma once

// Limit distributions of T and W (and of the pair) under the different
// growth regimes of m2 relative to m1, plus distances between the rescaled
// exact laws and those limits.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cardguess/deck.hpp"
#include "cardguess/rational.hpp"

namespace cardguess {

enum class RegimeFamily {
  TFixedM2,             // m2 fixed:            T/m1      -> Beta(1, m2)
  TSublinear,           // m2 = o(m1), m2 -> oo: m2 T/m1  -> Exp(1)
  TLinear,              // m2 ~ rho m1:          T        -> mixture of geometrics
  WSublinear,           // m2 = o(m1):           W        -> 0
  WLinear,              // m2 ~ rho m1, rho < 1: W        -> Geom((1-rho)/(1+rho)) - 1
  WNearDiagonalLargeD,  // sqrt(m1) << d << m1:  d W/m1   -> Exp(1/2)
  WNearDiagonalAlpha,   // d ~ alpha sqrt(m1):   W/sqrt(m1) -> LinExp(alpha/2, 1/2)
  WNearDiagonalSmallD,  // d = o(sqrt(m1)):      W/sqrt(m1) -> Rayleigh(sqrt 2)
  JointCentral,         // m2 ~ rho m1, rho < 1: (W, T) -> joint discrete law
};

class RegimeSpec {
 public:
  static RegimeSpec t_fixed_m2(int m2);
  static RegimeSpec t_sublinear();
  static RegimeSpec t_linear(double rho);  // rho in (0, 1]
  static RegimeSpec w_sublinear();
  static RegimeSpec w_linear(double rho);  // rho in (0, 1)
  static RegimeSpec w_large_difference();
  static RegimeSpec w_alpha(double alpha);  // alpha > 0
  static RegimeSpec w_small_difference();
  static RegimeSpec joint_central(double rho);  // rho in (0, 1)

  // Builds a regime from its tag ("T-fixed-m2", "W-linear", ...); parameters
  // the family does not use must be absent.
  static RegimeSpec from_name(const std::string& name, std::optional<double> rho,
                              std::optional<double> alpha, std::optional<int> fixed_m2);

  RegimeFamily family() const { return family_; }
  std::optional<double> rho() const { return rho_; }
  std::optional<double> alpha() const { return alpha_; }
  std::optional<int> fixed_m2() const { return fixed_m2_; }

  std::string name() const;
  // True for the families whose scaled variable is T.
  bool about_T() const;

 private:
  RegimeSpec(RegimeFamily family) : family_(family) {}

  RegimeFamily family_;
  std::optional<double> rho_;
  std::optional<double> alpha_;
  std::optional<int> fixed_m2_;
};

std::vector<std::string> regime_names();

struct LimitLaw {
  std::function<double(double)> cdf;
  // Present for lattice laws on the integers.
  std::optional<std::function<double(std::int64_t)>> pmf;
  std::string description;

  bool discrete() const { return pmf.has_value(); }
};

// Throws DomainError for JointCentral (see joint_limit_pmf).
LimitLaw limit_law(const RegimeSpec& regime);

// Joint law of the central-regime limit pair (Xhat, Yhat), k >= 0, l >= 1.
double joint_limit_pmf(double rho, std::int64_t k, std::int64_t l);

// Linear exponential law LinExp(lambda, nu): F(x) = 1 - exp(-(lambda x + nu x^2/2)).
double linexp_cdf(double lambda, double nu, double x);
// -lambda/nu + sqrt(lambda^2 + 2 nu z)/nu; maps an Exp(1) variate z to LinExp.
double linexp_from_exponential(double lambda, double nu, double z);

// Kolmogorov-Smirnov statistic of a sample against a continuous CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

struct RegimeDiagnostics {
  double ratio;               // m2 / m1
  double scaled_difference;   // d / sqrt(m1)
  double relative_difference; // d / m1
};

RegimeDiagnostics regime_diagnostics(const DeckComposition& deck);

// Multiplier applied to T or W by the regime (1/m1, m2/m1, d/m1, 1/sqrt(m1) or 1).
double regime_scale(const DeckComposition& deck, const RegimeSpec& regime);

// P{scale * V <= x} for V = T or W per the regime, from the exact marginal.
Rational scaled_exact_cdf(const DeckComposition& deck, const RegimeSpec& regime, double x);

// Kolmogorov-Smirnov distance (continuous limits, checked on both sides of
// every jump) or total-variation distance (discrete limits, including the
// joint central law) between the rescaled exact law and the regime's limit.
double convergence_distance(const DeckComposition& deck, const RegimeSpec& regime);

// Total-variation distance between the exact joint (W, T) law and the
// product of its own marginals.
double independence_distance(const DeckComposition& deck);

}  // namespace cardguess
