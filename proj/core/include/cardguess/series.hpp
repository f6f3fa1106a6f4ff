#pragma once

// Truncated multivariate power series over (z, y, u, w) with exact
// coefficients, and the closed-form generating function of the joint
// (W, T) law expanded from it.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "cardguess/rational.hpp"

namespace cardguess {

enum class Var : int { z = 0, y = 1, u = 2, w = 3 };

using Exponents = std::array<int, 4>;

class FormalSeries {
 public:
  // Series keeps exactly the monomials with exponent[i] <= order[i].
  explicit FormalSeries(Exponents order);

  static FormalSeries constant(const Rational& c, Exponents order);
  static FormalSeries variable(Var v, Exponents order);
  static FormalSeries monomial(Exponents e, const Rational& c, Exponents order);

  const Exponents& order() const { return order_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(Exponents e) const;
  // Smallest total degree of a nonzero term; -1 for the zero series.
  int valuation() const;

  FormalSeries& operator+=(const FormalSeries& other);
  FormalSeries& operator-=(const FormalSeries& other);
  FormalSeries scaled(const Rational& c) const;

  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);

  bool is_zero() const { return terms_.empty(); }

 private:
  bool in_box(const Exponents& e) const;
  void add(const Exponents& e, const Rational& c);

  Exponents order_;
  std::map<Exponents, Rational> terms_;
};

// 1 / (1 - g) by geometric expansion; g must have positive valuation.
FormalSeries geometric(const FormalSeries& g);

// sum_n coefficients[n] * g^n; g must have positive valuation.
FormalSeries compose(const std::vector<Rational>& coefficients, const FormalSeries& g);

// Coefficients c_0..c_n of the shifted Catalan series
// P(q) = sum_{n>=1} C(2n-2, n-1)/n q^n = (1 - sqrt(1 - 4q)) / 2.
std::vector<Rational> catalan_coefficients(int max_degree);

// P(z) as a series in z alone.
FormalSeries catalan_series(int max_degree);

// Kernel root lambda(z, 1) = (1 - sqrt(1 - 4z)) / (2z), expanded as
// 1 / (1 - P(z)).
FormalSeries kernel_root_series(int max_degree);

inline constexpr std::int64_t kDefaultSeriesBudget = 31LL * 31 * 31 * 31;
inline constexpr int kDefaultSeriesMaxM1 = 30;

// Expansion of
//   (1-z)/((1-y-z)(1-uz)) - y/(1-y-z)
//     + u z y (2w(1-y) - 1) / ((1-y-z)(1 - 2w P(zy))(1 - u P(zy)))
// through degree max_m1 in every variable. For m1 >= m2 the coefficient of
// z^m1 y^m2 u^l w^k is C(m1+m2, m1) P{W = k, T = l}; coefficients with
// m2 > m1 belong to the other half of the quadrant and carry no meaning.
// Throws ResourceLimitError when (max_m1+1)^4 exceeds `budget`.
FormalSeries series_Fhat(int max_m1, std::int64_t budget = kDefaultSeriesBudget);

// [z^m1 y^m2 u^l w^k] of a series_Fhat expansion.
Rational fhat_coefficient(const FormalSeries& fhat, int m1, int m2, int l, int k);

}  // namespace cardguess
