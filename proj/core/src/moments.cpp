#include "cardguess/moments.hpp"

#include <cmath>
#include <numbers>

#include "cardguess/errors.hpp"

namespace cardguess {

namespace {

void require_order(int s) {
  if (s < 1) throw DomainError("moment order must be >= 1");
}

}  // namespace

Rational factorial_moment_W(const DeckComposition& deck, int s) {
  require_order(s);
  const std::int64_t m1 = deck.m1();
  const std::int64_t m2 = deck.m2();
  const std::int64_t total = deck.total();
  if (s - 1 > m2 - 1) return 0;

  Integer sum = 0;
  Integer chooser = 1;                                    // C(k, s-1), starting at k = s-1
  Integer power = pow2(s);                                // 2^{k+1}
  DescendingBinomial tail(total - (s - 1) - 1, m1);       // C(M-k-1, m1)
  for (std::int64_t k = s - 1; k <= m2 - 1; ++k) {
    sum += chooser * power * tail.value();
    // C(k+1, s-1) = C(k, s-1) (k+1) / (k+2-s)
    chooser *= static_cast<unsigned long>(k + 1);
    mpz_divexact_ui(chooser.get_mpz_t(), chooser.get_mpz_t(),
                    static_cast<unsigned long>(k + 2 - s));
    power *= 2;
    tail.step();
  }
  Rational result(sum * factorial(s), binomial(total, m1));
  result.canonicalize();
  return result;
}

Rational factorial_moment_Chat(const DeckComposition& deck, int s) {
  return factorial_moment_W(deck, s) / Rational(pow2(s));
}

std::vector<std::vector<Integer>> stirling2_table(int max_n) {
  std::vector<std::vector<Integer>> table(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    table[n].assign(n + 1, Integer(0));
    table[n][0] = n == 0 ? 1 : 0;
    for (int k = 1; k <= n; ++k) {
      const Integer left = k <= n - 1 ? table[n - 1][k] : Integer(0);
      table[n][k] = k * left + table[n - 1][k - 1];
    }
  }
  return table;
}

Rational raw_moment_Chat(const DeckComposition& deck, int s) {
  require_order(s);
  const auto stirling = stirling2_table(s);
  Rational sum = 0;
  for (int j = 1; j <= s; ++j) sum += Rational(stirling[s][j]) * factorial_moment_Chat(deck, j);
  return sum;
}

double gamma_half_integer(int s) {
  if (s < 0) throw DomainError("gamma_half_integer: negative argument");
  // Gamma(x + 1) = x Gamma(x), walked down to Gamma(1) or Gamma(1/2).
  double x = s / 2.0 + 1.0;
  double value = 1.0;
  while (x > 1.0) {
    x -= 1.0;
    value *= x;
  }
  return x == 1.0 ? value : value * std::sqrt(std::numbers::pi);
}

double asym_raw_moment_Chat_equal(int m, int s) {
  if (m < 1) throw DomainError("asymptotic moment needs m >= 1");
  require_order(s);
  return gamma_half_integer(s) * std::pow(static_cast<double>(m), s / 2.0);
}

Rational falling_factorial_moment(const DiscretePMF& pmf, int s) {
  require_order(s);
  Rational sum = 0;
  for (const auto& [value, mass] : pmf.masses()) {
    Integer falling = 1;
    for (int i = 0; i < s; ++i) falling *= static_cast<long>(value - i);
    sum += mass * Rational(falling);
  }
  return sum;
}

Rational raw_moment(const DiscretePMF& pmf, int s, std::int64_t shift) {
  if (s < 0) throw DomainError("raw moment order must be >= 0");
  Rational sum = 0;
  for (const auto& [value, mass] : pmf.masses()) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), Integer(static_cast<long>(value - shift)).get_mpz_t(),
               static_cast<unsigned long>(s));
    sum += mass * Rational(power);
  }
  return sum;
}

MomentReport balanced_moment_report(int m, int s) {
  const DeckComposition deck(m, m);
  MomentReport report{s, raw_moment_Chat(deck, s), asym_raw_moment_Chat_equal(m, s), 0.0};
  report.ratio = report.asymptotic != 0.0 ? to_double(report.exact) / report.asymptotic : 0.0;
  return report;
}

}  // namespace cardguess
