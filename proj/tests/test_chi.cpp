#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "conekit/chi.hpp"

using namespace conekit;

namespace {

// Closed-form antiderivative for tau = 1/2, eps = 1 via u = sqrt(1 + r):
// (1/tau) * int_0^t (sqrt(1+r) - 1)/r dr = 2 * [2(u - log(1+u))]_{u=1}^{sqrt(1+t)}.
double chi_half_eps1(double t) {
  auto F = [](double u) { return 2.0 * (u - std::log1p(u)); };
  return 2.0 * (F(std::sqrt(1.0 + t)) - F(1.0));
}

}  // namespace

TEST_CASE("chi closed form at eps = 0") {
  // tau = 1/2: chi = t^tau / tau^2 = 4 sqrt(t).
  CHECK(chi_eval(0.5, 0.0, 1.0) == doctest::Approx(4.0).epsilon(1e-12));
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0})
    CHECK(std::abs(chi_eval(0.5, 0.0, t) - std::pow(t, 0.5) / 0.25) < 1e-10);
  for (double tau : {0.25, 0.3, 0.75})
    for (double t : {0.2, 1.0, 7.0})
      CHECK(std::abs(chi_eval(tau, 0.0, t) - std::pow(t, tau) / (tau * tau)) < 1e-10);
}

TEST_CASE("chi vanishes at t = 0") {
  CHECK(chi_eval(0.5, 0.0, 0.0) == 0.0);
  CHECK(chi_eval(0.37, 1.3, 0.0) == 0.0);
}

TEST_CASE("chi quadrature against the antiderivative oracle") {
  CHECK(std::abs(chi_eval(0.5, 1.0, 1.0) - chi_half_eps1(1.0)) < 1e-10);
  CHECK(chi_eval(0.5, 1.0, 1.0) == doctest::Approx(0.9039486236539896).epsilon(1e-10));
  for (double t : {0.01, 0.3, 2.0, 9.0})
    CHECK(std::abs(chi_eval(0.5, 1.0, t) - chi_half_eps1(t)) < 1e-10);
}

TEST_CASE("chi monotone in t and dominated by the eps = 0 profile") {
  for (double tau : {0.3, 0.5, 0.75}) {
    for (double eps : {0.0, 0.3, 1.0}) {
      double prev = 0.0;
      for (double t = 0.1; t < 6.0; t += 0.37) {
        const double v = chi_eval(tau, eps, t);
        CHECK(v >= prev - 1e-12);
        CHECK(v <= chi_eval(tau, 0.0, t) + 1e-10);
        prev = v;
      }
    }
  }
}

TEST_CASE("chi domain errors") {
  CHECK_THROWS_AS(chi_eval(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(chi_eval(1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(chi_eval(0.5, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(chi_eval(0.5, 1.0, -0.1), std::domain_error);
}

TEST_CASE("chi derivatives closed forms") {
  // tau = 1/2, eps = 0, t = 4: chi' = (2 - 0)/(0.5 * 4) = 1.
  CHECK(chi_derivatives(0.5, 0.0, 4.0).first == doctest::Approx(1.0).epsilon(1e-13));
  // tau = 1/2, eps = 0, t = 1: chi'' = 1 - 2 = -1.
  CHECK(chi_derivatives(0.5, 0.0, 1.0).second == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("chi derivative limits at t = 0") {
  // chi' -> eps^(2 tau - 2); for tau = 1/2, eps = 0.5 this is 2.
  CHECK(chi_derivatives(0.5, 0.5, 0.0).first == doctest::Approx(2.0).epsilon(1e-13));
  // chi'' -> (tau - 1)/2 * eps^(2 tau - 4).
  const double expected = (0.5 - 1.0) / 2.0 * std::pow(0.5, 2 * 0.5 - 4.0);
  CHECK(chi_derivatives(0.5, 0.5, 0.0).second == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(chi_derivatives(0.5, 0.0, 0.0), std::domain_error);
}

TEST_CASE("chi derivative series joins the direct formula smoothly") {
  for (double tau : {0.3, 0.5, 0.8}) {
    for (double eps : {0.2, 1.0}) {
      const double eps2 = eps * eps;
      // Compare across the series/direct switch at t = eps^2 / 2.
      for (double x : {0.4999, 0.5001, 0.49, 0.51}) {
        const auto lo = chi_derivatives(tau, eps, eps2 * (x - 1e-9));
        const auto hi = chi_derivatives(tau, eps, eps2 * (x + 1e-9));
        CHECK(std::abs(lo.first - hi.first) < 1e-9 * (1.0 + std::abs(hi.first)));
        CHECK(std::abs(lo.second - hi.second) < 1e-7 * (1.0 + std::abs(hi.second)));
      }
    }
  }
}

TEST_CASE("chi derivatives match finite differences of chi_eval") {
  for (double tau : {0.35, 0.5}) {
    for (double eps : {0.4, 1.0}) {
      for (double t : {0.5, 2.0}) {
        const double h = 1e-5;
        const double fd1 = (chi_eval(tau, eps, t + h) - chi_eval(tau, eps, t - h)) / (2 * h);
        const auto d = chi_derivatives(tau, eps, t);
        CHECK(std::abs(fd1 - d.first) < 1e-8 * (1.0 + std::abs(d.first)));
        const double fd2 = (chi_derivatives(tau, eps, t + h).first -
                            chi_derivatives(tau, eps, t - h).first) /
                           (2 * h);
        CHECK(std::abs(fd2 - d.second) < 1e-6 * (1.0 + std::abs(d.second)));
      }
    }
  }
}
