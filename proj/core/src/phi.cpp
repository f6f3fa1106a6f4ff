#include "cardguess/phi.hpp"

#include "cardguess/errors.hpp"

namespace cardguess {

TrivariatePolynomial TrivariatePolynomial::constant(const Rational& c) {
  return monomial({}, c);
}

TrivariatePolynomial TrivariatePolynomial::monomial(Monomial m, const Rational& c) {
  if (m.u1 < 0 || m.u2 < 0 || m.w < 0) throw DomainError("negative exponent");
  TrivariatePolynomial p;
  p.add(m, c);
  return p;
}

Rational TrivariatePolynomial::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TrivariatePolynomial::add(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

TrivariatePolynomial& TrivariatePolynomial::operator+=(const TrivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

TrivariatePolynomial TrivariatePolynomial::times(Monomial shift, const Rational& c) const {
  TrivariatePolynomial out;
  for (const auto& [m, coeff] : terms_)
    out.add({m.u1 + shift.u1, m.u2 + shift.u2, m.w + shift.w}, coeff * c);
  return out;
}

TrivariatePolynomial TrivariatePolynomial::scaled(const Rational& c) const {
  return times({}, c);
}

std::vector<std::vector<TrivariatePolynomial>> phi_table(int max_total) {
  if (max_total < 0) throw DomainError("phi_table: negative size");
  std::vector<std::vector<TrivariatePolynomial>> table(max_total + 1);
  for (int a = 0; a <= max_total; ++a) table[a].resize(std::min(a, max_total - a) + 1);

  // Increasing a + b, so every dependency is ready.
  for (int n = 0; n <= max_total; ++n) {
    for (int b = 0; 2 * b <= n; ++b) {
      const int a = n - b;
      TrivariatePolynomial& phi = table[a][b];
      if (b == 0) {
        phi = TrivariatePolynomial::monomial({0, a, 0});
      } else if (a == b) {
        phi = table[a][b - 1].times({0, 0, 1}, 2);
      } else {
        phi = table[a - 1][b].times({1, 0, 0});
        phi += table[a][b - 1];
      }
    }
  }
  return table;
}

TrivariatePolynomial phi_recurrence(const DeckComposition& deck) {
  auto table = phi_table(deck.total());
  return std::move(table[deck.m1()][deck.m2()]);
}

JointPMF phi_joint_WT(const TrivariatePolynomial& phi, const DeckComposition& deck) {
  const Rational denominator(binomial(deck.total(), deck.m1()));
  std::map<JointKey, Rational> masses;
  for (const auto& [m, c] : phi.terms()) masses[{m.w, m.u2}] += c / denominator;
  return JointPMF(std::move(masses));
}

}  // namespace cardguess
