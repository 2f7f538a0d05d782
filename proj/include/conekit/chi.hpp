#pragma once

namespace conekit {

/// Regularizing potential profile
///   chi(tau, eps; t) = (1/tau) * integral_0^t ((eps^2 + r)^tau - eps^(2 tau)) / r dr.
/// For eps = 0 this reduces to t^tau / tau^2. Absolute accuracy ~1e-12 on t <= ~10.
double chi_eval(double tau, double eps, double t);

struct ChiDerivatives {
  double first;   // chi'(eps^2 + t)
  double second;  // chi''(eps^2 + t)
};

/// Derivatives of chi with respect to its argument, evaluated at eps^2 + t.
///   tau * chi'  = ((eps^2+t)^tau - eps^(2 tau)) / t
///   tau * chi'' = tau (eps^2+t)^(tau-1) / t - ((eps^2+t)^tau - eps^(2 tau)) / t^2
/// At t = 0 (eps > 0) returns the limits chi' = eps^(2 tau - 2),
/// chi'' = (tau-1)/2 * eps^(2 tau - 4). Throws std::domain_error at t = eps = 0.
ChiDerivatives chi_derivatives(double tau, double eps, double t);

}  // namespace conekit
