#include "cardguess/series.hpp"

#include <string>

#include "cardguess/errors.hpp"

namespace cardguess {

FormalSeries::FormalSeries(Exponents order) : order_(order) {
  for (int o : order_)
    if (o < 0) throw DomainError("negative truncation order");
}

FormalSeries FormalSeries::constant(const Rational& c, Exponents order) {
  return monomial({0, 0, 0, 0}, c, order);
}

FormalSeries FormalSeries::variable(Var v, Exponents order) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<int>(v)] = 1;
  return monomial(e, 1, order);
}

FormalSeries FormalSeries::monomial(Exponents e, const Rational& c, Exponents order) {
  FormalSeries s(order);
  for (int x : e)
    if (x < 0) throw DomainError("negative exponent");
  if (s.in_box(e)) s.add(e, c);
  return s;
}

bool FormalSeries::in_box(const Exponents& e) const {
  for (int i = 0; i < 4; ++i)
    if (e[i] > order_[i]) return false;
  return true;
}

void FormalSeries::add(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational FormalSeries::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int FormalSeries::valuation() const {
  int best = -1;
  for (const auto& entry : terms_) {
    const auto& e = entry.first;
    const int degree = e[0] + e[1] + e[2] + e[3];
    if (best < 0 || degree < best) best = degree;
  }
  return best;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other) {
  if (other.order_ != order_) throw DomainError("series truncation orders differ");
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& other) {
  if (other.order_ != order_) throw DomainError("series truncation orders differ");
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

FormalSeries FormalSeries::scaled(const Rational& c) const {
  FormalSeries out(order_);
  for (const auto& [e, coeff] : terms_) out.add(e, coeff * c);
  return out;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  if (a.order_ != b.order_) throw DomainError("series truncation orders differ");
  FormalSeries out(a.order_);
  Rational product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      if (!out.in_box(e)) continue;
      product = ca * cb;
      out.add(e, product);
    }
  }
  return out;
}

FormalSeries geometric(const FormalSeries& g) {
  if (g.valuation() == 0) throw DomainError("geometric: argument has a constant term");
  FormalSeries sum = FormalSeries::constant(1, g.order());
  FormalSeries power = FormalSeries::constant(1, g.order());
  // Positive valuation and a finite box: the powers eventually vanish.
  while (true) {
    power = power * g;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

FormalSeries compose(const std::vector<Rational>& coefficients, const FormalSeries& g) {
  if (g.valuation() == 0) throw DomainError("compose: inner series has a constant term");
  FormalSeries sum(g.order());
  FormalSeries power = FormalSeries::constant(1, g.order());
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (n > 0) power = power * g;
    if (power.is_zero()) break;
    sum += power.scaled(coefficients[n]);
  }
  return sum;
}

std::vector<Rational> catalan_coefficients(int max_degree) {
  if (max_degree < 0) throw DomainError("catalan_coefficients: negative degree");
  std::vector<Rational> c(max_degree + 1, Rational(0));
  for (int n = 1; n <= max_degree; ++n) {
    c[n] = Rational(binomial(2 * n - 2, n - 1), Integer(n));
    c[n].canonicalize();
  }
  return c;
}

FormalSeries catalan_series(int max_degree) {
  const auto c = catalan_coefficients(max_degree);
  FormalSeries s({max_degree, 0, 0, 0});
  for (int n = 1; n <= max_degree; ++n)
    s += FormalSeries::monomial({n, 0, 0, 0}, c[n], s.order());
  return s;
}

FormalSeries kernel_root_series(int max_degree) {
  return geometric(catalan_series(max_degree));
}

FormalSeries series_Fhat(int max_m1, std::int64_t budget) {
  if (max_m1 < 1) throw DomainError("series_Fhat needs max_m1 >= 1");
  const std::int64_t side = max_m1 + 1;
  if (side * side * side * side > budget)
    throw ResourceLimitError("series_Fhat: truncation order " + std::to_string(max_m1) +
                             " exceeds the coefficient budget " + std::to_string(budget));

  const Exponents box{max_m1, max_m1, max_m1, max_m1};
  const auto z = FormalSeries::variable(Var::z, box);
  const auto y = FormalSeries::variable(Var::y, box);
  const auto u = FormalSeries::variable(Var::u, box);
  const auto w = FormalSeries::variable(Var::w, box);
  const auto one = FormalSeries::constant(1, box);

  const FormalSeries catalan = compose(catalan_coefficients(max_m1), z * y);  // P(zy)
  const FormalSeries diagonal = geometric(y + z);                             // 1/(1-y-z)

  FormalSeries result = (one - z) * diagonal * geometric(u * z);
  result -= y * diagonal;

  const FormalSeries ties = geometric(w.scaled(2) * catalan);  // 1/(1-2wP)
  const FormalSeries hits = geometric(u * catalan);            // 1/(1-uP)
  const FormalSeries prefactor = u * z * y * (w.scaled(2) * (one - y) - one);
  result += ((prefactor * ties * hits) * diagonal);
  return result;
}

Rational fhat_coefficient(const FormalSeries& fhat, int m1, int m2, int l, int k) {
  return fhat.coefficient({m1, m2, l, k});
}

}  // namespace cardguess
