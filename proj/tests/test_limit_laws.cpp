#include "doctest.h"

#include <cmath>
#include <random>

#include "cardguess/correlation.hpp"
#include "cardguess/errors.hpp"
#include "cardguess/exact.hpp"
#include "cardguess/limit_laws.hpp"
#include "test_support.hpp"

using namespace cardguess;
using cardguess::testing::q;

TEST_SUITE("limit_laws") {
  TEST_CASE("regime construction") {
    CHECK(RegimeSpec::from_name("T-linear", 0.5, std::nullopt, std::nullopt).rho() == 0.5);
    CHECK(RegimeSpec::from_name("T-linear", 1.0, std::nullopt, std::nullopt).family() ==
          RegimeFamily::TLinear);
    CHECK_THROWS_AS(RegimeSpec::from_name("T-linear", std::nullopt, std::nullopt, std::nullopt),
                    DomainError);
    CHECK_THROWS_AS(RegimeSpec::from_name("W-sublinear", 0.5, std::nullopt, std::nullopt),
                    DomainError);
    CHECK_THROWS_AS(RegimeSpec::from_name("nope", std::nullopt, std::nullopt, std::nullopt),
                    DomainError);
    CHECK_THROWS_AS(RegimeSpec::w_linear(1.0), DomainError);
    CHECK_THROWS_AS(RegimeSpec::t_linear(0.0), DomainError);
    CHECK_THROWS_AS(RegimeSpec::w_alpha(-1.0), DomainError);
    CHECK_THROWS_AS(RegimeSpec::t_fixed_m2(0), DomainError);
    for (const auto& name : regime_names()) {
      const bool rho = name == "T-linear" || name == "W-linear" || name == "joint-central";
      const auto r = RegimeSpec::from_name(
          name, rho ? std::optional<double>(0.5) : std::nullopt,
          name == "W-near-diagonal-alpha" ? std::optional<double>(1.0) : std::nullopt,
          name == "T-fixed-m2" ? std::optional<int>(2) : std::nullopt);
      CHECK(r.name() == name);
    }
  }

  TEST_CASE("limit law examples") {
    const auto geom = limit_law(RegimeSpec::t_linear(1.0));
    REQUIRE(geom.discrete());
    for (int l = 1; l <= 20; ++l) CHECK((*geom.pmf)(l) == doctest::Approx(std::pow(0.5, l)));

    const auto wl = limit_law(RegimeSpec::w_linear(0.5));
    CHECK((*wl.pmf)(0) == doctest::Approx(1.0 / 3.0));
    CHECK(wl.cdf(0.0) == doctest::Approx(1.0 / 3.0));

    const double alpha = 0.7;
    const auto lin = limit_law(RegimeSpec::w_alpha(alpha));
    const auto ray = limit_law(RegimeSpec::w_small_difference());
    const auto tiny = limit_law(RegimeSpec::w_alpha(1e-12));
    for (double x : {0.1, 0.5, 1.0, 2.5, 4.0}) {
      CHECK(lin.cdf(x) == doctest::Approx(1 - std::exp(-x * (2 * alpha + x) / 4)));
      CHECK(tiny.cdf(x) == doctest::Approx(ray.cdf(x)));
    }
    CHECK_THROWS_AS(limit_law(RegimeSpec::joint_central(0.5)), DomainError);
  }

  TEST_CASE("discrete limit laws sum to one and match their cdf") {
    for (double rho : {0.1, 0.5, 0.9, 1.0}) {
      const auto law = limit_law(RegimeSpec::t_linear(rho));
      double sum = 0;
      for (int l = 1; l <= 4000; ++l) {
        sum += (*law.pmf)(l);
        if (l <= 40) CHECK(law.cdf(l) == doctest::Approx(sum).epsilon(1e-12));
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("joint limit pmf") {
    CHECK(joint_limit_pmf(0.3, 0, 1) == 0.0);
    CHECK(joint_limit_pmf(0.5, 1, 1) == doctest::Approx(4.0 / 27.0));
    CHECK_THROWS_AS(joint_limit_pmf(1.0, 1, 1), DomainError);

    for (double rho : {0.1, 0.269187, 0.5, 0.9}) {
      CAPTURE(rho);
      const auto t = limit_law(RegimeSpec::t_linear(rho));
      const auto w = limit_law(RegimeSpec::w_linear(rho));
      const int cut_l = static_cast<int>(std::log(1e-14) / std::log(1 / (1 + rho))) + 5;
      const int cut_k = static_cast<int>(std::log(1e-14) / std::log(2 * rho / (1 + rho))) + 5;
      for (int l = 1; l <= 10; ++l) {
        double s = 0;
        for (int k = 0; k <= cut_k; ++k) s += joint_limit_pmf(rho, k, l);
        CHECK(std::abs(s - (*t.pmf)(l)) < 1e-10);
      }
      for (int k = 0; k <= 10; ++k) {
        double s = 0;
        for (int l = 1; l <= cut_l; ++l) s += joint_limit_pmf(rho, k, l);
        CHECK(std::abs(s - (*w.pmf)(k)) < 1e-10);
      }
    }
  }

  TEST_CASE("scaled exact cdf examples") {
    CHECK(scaled_exact_cdf({2, 1}, RegimeSpec::t_fixed_m2(1), 0.5) == q("2/3"));
    CHECK(scaled_exact_cdf({2, 2}, RegimeSpec::w_small_difference(), 1.0) == q("1/3"));
    CHECK(scaled_exact_cdf({2, 2}, RegimeSpec::w_small_difference(), -1.0) == 0);
    CHECK(scaled_exact_cdf({2, 2}, RegimeSpec::w_small_difference(), 10.0) == 1);
    const auto w = marginal_W({9, 9});
    for (int k = 0; k <= 9; ++k)
      CHECK(scaled_exact_cdf({9, 9}, RegimeSpec::w_small_difference(), k / 3.0) == w.cdf(k));
    CHECK_THROWS_AS(scaled_exact_cdf({4, 2}, RegimeSpec::t_fixed_m2(3), 0.5), DomainError);
    CHECK_THROWS_AS(scaled_exact_cdf({4, 4}, RegimeSpec::w_large_difference(), 0.5), DomainError);
  }

  TEST_CASE("convergence distances") {
    CHECK(convergence_distance({12, 0}, RegimeSpec::w_sublinear()) == 0.0);
    const double small = convergence_distance({400, 400}, RegimeSpec::w_small_difference());
    const double large = convergence_distance({6400, 6400}, RegimeSpec::w_small_difference());
    CHECK(large < small);
    CHECK(large < 0.05);
    const double j50 = convergence_distance({50, 25}, RegimeSpec::joint_central(0.5));
    const double j200 = convergence_distance({200, 100}, RegimeSpec::joint_central(0.5));
    CHECK(j200 < j50);
  }

  TEST_CASE("independence distance shrinks near the diagonal") {
    const double a = independence_distance({100, 100});
    const double b = independence_distance({400, 400});
    CHECK(b < a);
    CHECK(independence_distance({5, 0}) == doctest::Approx(0.0));
  }

  TEST_CASE("regime diagnostics") {
    const auto d = regime_diagnostics({100, 80});
    CHECK(d.ratio == doctest::Approx(0.8));
    CHECK(d.scaled_difference == doctest::Approx(2.0));
    CHECK(d.relative_difference == doctest::Approx(0.2));
  }

  TEST_CASE("LinExp representation passes a KS test at 1e5 samples") {
    std::mt19937_64 engine(20240611);
    std::exponential_distribution<double> exp1(1.0);
    for (double lambda : {0.25, 1.0}) {
      const double nu = 0.5;
      std::vector<double> xs(100000);
      for (auto& x : xs) x = linexp_from_exponential(lambda, nu, exp1(engine));
      const double d = ks_statistic(xs, [&](double x) { return linexp_cdf(lambda, nu, x); });
      // 1.95 / sqrt(n) is the asymptotic 0.001 critical value.
      CHECK(d < 1.95 / std::sqrt(100000.0));
    }
  }
}

TEST_SUITE("correlation") {
  TEST_CASE("closed forms") {
    const auto r = correlation_closed_form(0.5);
    CHECK(r.mean_x == doctest::Approx(2.0));
    CHECK(r.mean_y == doctest::Approx(2.5));
    for (double rho : {0.05, 0.3, 0.77}) CHECK(correlation_closed_form(rho).covariance == -2.0);
  }

  TEST_CASE("truncated sums reproduce the closed forms") {
    for (double rho : {0.1, 0.5, 0.9}) {
      const auto a = correlation_analysis(rho);
      CHECK(a.verified);
      CHECK(std::abs(a.summed.covariance + 2.0) < 1e-8);
    }
  }

  TEST_CASE("mgf derivatives reproduce the moments") {
    for (double rho : {0.1, 0.269187, 0.5, 0.9}) {
      CAPTURE(rho);
      const auto f = [&](double s, double t) { return joint_mgf(rho, s, t); };
      // Central differences with one Richardson step.
      const auto richardson = [](auto d, double h) { return (4 * d(h / 2) - d(h)) / 3; };
      const double h = 1e-3;
      const double ex = richardson([&](double e) { return (f(e, 0) - f(-e, 0)) / (2 * e); }, h);
      const double ey = richardson([&](double e) { return (f(0, e) - f(0, -e)) / (2 * e); }, h);
      const double exx =
          richardson([&](double e) { return (f(e, 0) - 2 * f(0, 0) + f(-e, 0)) / (e * e); }, h);
      const double eyy =
          richardson([&](double e) { return (f(0, e) - 2 * f(0, 0) + f(0, -e)) / (e * e); }, h);
      const double exy = richardson(
          [&](double e) { return (f(e, e) - f(e, -e) - f(-e, e) + f(-e, -e)) / (4 * e * e); }, h);
      const double r = rho;
      const auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
      CHECK(f(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(rel(ex, 2 * r / (1 - r)) < 1e-6);
      CHECK(rel(ey, (r * r + 1) / r) < 1e-6);
      CHECK(rel(exx, 2 * r * (1 + 3 * r) / ((1 - r) * (1 - r))) < 1e-6);
      CHECK(rel(eyy, (2 * r * r * r * r + r * r * r + r + 2) / (r * r)) < 1e-6);
      CHECK(rel(exy, 2 * r * (1 + r) / (1 - r)) < 1e-6);
    }
  }

  TEST_CASE("minimum correlation") {
    const auto m = min_correlation();
    CHECK(std::abs(m.rho - 0.269187) < 1e-5);
    CHECK(std::abs(m.correlation + 0.444039) < 1e-5);
    CHECK(std::abs(m.kappa_at_root) < 1e-12);
  }

  TEST_CASE("curve shape") {
    const auto curve = correlation_curve(101);
    REQUIRE(curve.size() == 101);
    CHECK(curve.front().second == 0.0);
    CHECK(curve.back().second == 0.0);
    std::size_t argmin = 0;
    for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
      CHECK(curve[i].second < 0.0);
      if (curve[i].second < curve[argmin].second || argmin == 0) argmin = i;
    }
    for (std::size_t i = 1; i < argmin; ++i) CHECK(curve[i].second < curve[i - 1].second);
    for (std::size_t i = argmin + 1; i < curve.size(); ++i) CHECK(curve[i].second > curve[i - 1].second);
  }
}
