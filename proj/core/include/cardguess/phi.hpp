#pragma once

#include <compare>
#include <map>
#include <vector>

#include "cardguess/deck.hpp"
#include "cardguess/pmf.hpp"
#include "cardguess/rational.hpp"

namespace cardguess {

// Exponents of u1 (more-likely guesses), u2 (certified guesses) and
// w (tie visits).
struct Monomial {
  int u1 = 0;
  int u2 = 0;
  int w = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Polynomial in u1, u2, w with exact coefficients; zero terms are never
// stored.
class TrivariatePolynomial {
 public:
  TrivariatePolynomial() = default;

  static TrivariatePolynomial constant(const Rational& c);
  static TrivariatePolynomial monomial(Monomial m, const Rational& c = 1);

  Rational coefficient(Monomial m) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  TrivariatePolynomial& operator+=(const TrivariatePolynomial& other);
  // Multiplies by c * u1^a u2^b w^c.
  TrivariatePolynomial times(Monomial m, const Rational& c = 1) const;
  TrivariatePolynomial scaled(const Rational& c) const;

  friend bool operator==(const TrivariatePolynomial&, const TrivariatePolynomial&) = default;

 private:
  void add(Monomial m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

// Phi_{m1,m2} = C(m1+m2, m1) * E(u1^L u2^T w^W), from
//   Phi_{m,0} = u2^m,
//   Phi_{a,b} = u1 Phi_{a-1,b} + Phi_{a,b-1}   (a > b > 0),
//   Phi_{m,m} = 2 w Phi_{m,m-1}                (m >= 1).
TrivariatePolynomial phi_recurrence(const DeckComposition& deck);

// All Phi_{a,b} with a >= b and a + b <= max_total, indexed [a][b].
std::vector<std::vector<TrivariatePolynomial>> phi_table(int max_total);

// (W, T) law read off Phi after dividing by C(m1+m2, m1) and summing over
// the u1 exponent.
JointPMF phi_joint_WT(const TrivariatePolynomial& phi, const DeckComposition& deck);

}  // namespace cardguess
