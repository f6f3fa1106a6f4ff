#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cardguess {

using Integer = mpz_class;

// Canonical exact rational: GMP keeps the denominator positive and
// gcd(|num|, den) = 1 after every arithmetic operation.
using Rational = mpq_class;

// C(n, r); zero whenever r < 0, r > n or n < 0.
Integer binomial(std::int64_t n, std::int64_t r);

// 2^k for k >= 0.
Integer pow2(std::int64_t k);

Integer factorial(std::int64_t n);

// Exact "num/den" form; integers are rendered as "num/1".
std::string to_string(const Rational& q);

// Parses "num/den" or "num"; throws DomainError on malformed input or a
// zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

// num / den as a double without forming the canonical rational; stays
// accurate when both operands are far outside the double range.
double ratio_to_double(const Integer& num, const Integer& den);

// Rounds to `digits` significant decimal digits (used for the decimal
// companion fields in serialized output).
double round_significant(double value, int digits = 12);

// Walks C(n, r), C(n-1, r), C(n-2, r), ... for a fixed lower index using
// one multiply and one exact division per step.
class DescendingBinomial {
 public:
  DescendingBinomial(std::int64_t n, std::int64_t r);

  const Integer& value() const { return value_; }
  std::int64_t upper() const { return n_; }

  // Moves to C(n-1, r).
  void step();

 private:
  std::int64_t n_;
  std::int64_t r_;
  Integer value_;
};

}  // namespace cardguess
