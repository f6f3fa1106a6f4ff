#include "cardguess/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "cardguess/errors.hpp"

namespace cardguess {

Integer binomial(std::int64_t n, std::int64_t r) {
  Integer result = 0;
  if (n < 0 || r < 0 || r > n) return result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return result;
}

Integer pow2(std::int64_t k) {
  if (k < 0) throw DomainError("pow2: negative exponent");
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return result;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num(text.substr(0, slash));
  const std::string den = slash == std::string_view::npos ? std::string("1")
                                                          : std::string(text.substr(slash + 1));
  auto valid_integer = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw DomainError("malformed rational '" + std::string(text) + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

double ratio_to_double(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("ratio_to_double: zero denominator");
  if (num == 0) return 0.0;
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, num.get_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, den.get_mpz_t());
  return std::ldexp(num_mant / den_mant, static_cast<int>(num_exp - den_exp));
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

DescendingBinomial::DescendingBinomial(std::int64_t n, std::int64_t r)
    : n_(n), r_(r), value_(binomial(n, r)) {}

void DescendingBinomial::step() {
  // C(n-1, r) = C(n, r) * (n - r) / n
  if (value_ != 0 && n_ > 0) {
    value_ *= static_cast<unsigned long>(n_ - r_);
    mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(n_));
  }
  --n_;
  if (n_ < 0 || r_ > n_) value_ = 0;
}

}  // namespace cardguess
