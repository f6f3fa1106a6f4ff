#include "cardguess/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "cardguess/errors.hpp"
#include "cardguess/limit_laws.hpp"

namespace cardguess {

namespace {

void require_open_unit(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("rho must lie in (0, 1)");
}

// Smallest n with r^n (n + 1)^2 < tail, so second moments lose at most `tail`.
int truncation_length(double r, double tail) {
  int n = 1;
  double power = r;
  while (power * (n + 1.0) * (n + 1.0) >= tail) {
    ++n;
    power *= r;
    if (n > 10'000'000) throw ResourceLimitError("correlation sum does not converge fast enough");
  }
  return n;
}

}  // namespace

double joint_mgf(double rho, double s, double t) {
  require_open_unit(rho);
  const double es = std::exp(s);
  const double et = std::exp(t);
  const double d1 = 1.0 + rho - et;
  const double d2 = 1.0 + rho - rho * et;
  const double d3 = 1.0 + rho - 2.0 * rho * es;
  if (d1 <= 0.0 || d2 <= 0.0 || d3 <= 0.0)
    throw DomainError("joint_mgf: (s, t) outside the convergence region");
  return rho * (1.0 - rho) * et * (et + 2.0 * es - 2.0 * es * et) / (d1 * d2 * d3);
}

CorrelationReport correlation_closed_form(double rho) {
  require_open_unit(rho);
  const double r = rho;
  const double one_minus = 1.0 - r;
  CorrelationReport out{};
  out.rho = r;
  out.mean_x = 2.0 * r / one_minus;
  out.mean_y = (r * r + 1.0) / r;
  out.variance_x = 2.0 * r * (1.0 + r) / (one_minus * one_minus);
  out.variance_y = (1.0 + r - 2.0 * r * r + r * r * r + r * r * r * r) / (r * r);
  out.covariance = -2.0;
  out.correlation = correlation_coefficient(r);
  return out;
}

CorrelationReport correlation_by_summation(double rho, double tail) {
  require_open_unit(rho);
  if (!(tail > 0.0)) throw DomainError("tail must be positive");
  const int k_max = truncation_length(2.0 * rho / (1.0 + rho), tail);
  const int l_max = truncation_length(1.0 / (1.0 + rho), tail);

  double ex = 0, ey = 0, exx = 0, eyy = 0, exy = 0;
  for (int k = 0; k <= k_max; ++k) {
    for (int l = 1; l <= l_max; ++l) {
      const double p = joint_limit_pmf(rho, k, l);
      ex += k * p;
      ey += l * p;
      exx += static_cast<double>(k) * k * p;
      eyy += static_cast<double>(l) * l * p;
      exy += static_cast<double>(k) * l * p;
    }
  }
  CorrelationReport out{};
  out.rho = rho;
  out.mean_x = ex;
  out.mean_y = ey;
  out.variance_x = exx - ex * ex;
  out.variance_y = eyy - ey * ey;
  out.covariance = exy - ex * ey;
  out.correlation = out.covariance / std::sqrt(out.variance_x * out.variance_y);
  return out;
}

CorrelationAnalysis correlation_analysis(double rho) {
  CorrelationAnalysis out;
  out.closed_form = correlation_closed_form(rho);
  out.summed = correlation_by_summation(rho);
  const auto& a = out.closed_form;
  const auto& b = out.summed;
  out.max_deviation = std::max({std::abs(a.mean_x - b.mean_x), std::abs(a.mean_y - b.mean_y),
                                std::abs(a.variance_x - b.variance_x),
                                std::abs(a.variance_y - b.variance_y),
                                std::abs(a.covariance - b.covariance),
                                std::abs(a.correlation - b.correlation)});
  out.verified = out.max_deviation <= 1e-8;
  return out;
}

double correlation_coefficient(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("rho must lie in [0, 1]");
  if (rho == 0.0 || rho == 1.0) return 0.0;
  const double r = rho;
  return -std::sqrt(2.0 * r) * (1.0 - r) /
         std::sqrt((1.0 + r) * (1.0 + r - 2.0 * r * r + r * r * r + r * r * r * r));
}

double kappa(double rho) {
  const double r = rho;
  // Horner form of 1 - 3r - 3r^2 + 3r^3 - 6r^4 - 2r^5 + 2r^6.
  return 1.0 + r * (-3.0 + r * (-3.0 + r * (3.0 + r * (-6.0 + r * (-2.0 + r * 2.0)))));
}

MinimumCorrelation min_correlation() {
  double lo = 0.0;
  double hi = 1.0;  // kappa(0) = 1 > 0, kappa(1) = -8 < 0
  double mid = 0.5;
  for (;;) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted in double precision
    const double value = kappa(mid);
    if (std::abs(value) <= 1e-14) break;
    (value > 0.0 ? lo : hi) = mid;
  }
  return {mid, correlation_coefficient(mid), kappa(mid)};
}

std::vector<std::pair<double, double>> correlation_curve(int points) {
  if (points < 2) throw DomainError("correlation curve needs at least 2 points");
  std::vector<std::pair<double, double>> out;
  out.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double rho = i == points - 1 ? 1.0 : static_cast<double>(i) / (points - 1);
    out.emplace_back(rho, correlation_coefficient(rho));
  }
  return out;
}

}  // namespace cardguess
