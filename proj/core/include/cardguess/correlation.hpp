#pragma once

#include <utility>
#include <vector>

namespace cardguess {

// E(exp(s Xhat + t Yhat)) for the central-regime limit pair.
double joint_mgf(double rho, double s, double t);

struct CorrelationReport {
  double rho;
  double mean_x;
  double mean_y;
  double variance_x;
  double variance_y;
  double covariance;
  double correlation;
};

// Closed forms.
CorrelationReport correlation_closed_form(double rho);

// The same quantities from truncated sums over joint_limit_pmf; the
// neglected tail mass is below `tail` for each geometric direction.
CorrelationReport correlation_by_summation(double rho, double tail = 1e-16);

struct CorrelationAnalysis {
  CorrelationReport closed_form;
  CorrelationReport summed;
  // Largest absolute deviation between the two routes.
  double max_deviation;
  bool verified;  // max_deviation <= 1e-8
};

CorrelationAnalysis correlation_analysis(double rho);

// C_rho = -sqrt(2 rho)(1 - rho) / sqrt((1 + rho)(1 + rho - 2rho^2 + rho^3 + rho^4)),
// extended by 0 at rho = 0 and rho = 1.
double correlation_coefficient(double rho);

// 1 - 3r - 3r^2 + 3r^3 - 6r^4 - 2r^5 + 2r^6; its root in [0, 1] minimises C_rho.
double kappa(double rho);

struct MinimumCorrelation {
  double rho;
  double correlation;
  double kappa_at_root;
};

// Bisection on [0, 1] until |kappa| <= 1e-14 or the bracket cannot shrink.
MinimumCorrelation min_correlation();

// (rho, C_rho) on an even grid over [0, 1] with `points` >= 2 nodes.
std::vector<std::pair<double, double>> correlation_curve(int points);

}  // namespace cardguess
