#pragma once

#include "conekit/divisor.hpp"

namespace conekit {

/// psi_eps(z) = (1/N) sum_j chi_j(eps^2 + |s_j|^2(z)). Nonincreasing in eps.
double regularized_potential(const ConeDivisorConfig& cfg, const CVector& z, double eps,
                             int chart = 0);

/// Metric coefficients of the regularized family at z:
///   g = omega + (1/N) sum_j [ <D's_j, D's_j> / (eps^2+|s_j|^2)^(1-tau_j)
///                             - (1/tau_j)((eps^2+|s_j|^2)^tau_j - eps^(2 tau_j)) Theta_j ].
/// eps = 0 is allowed off the loci and yields the cone metric. Throws OnDivisor
/// when eps = 0 at a locus and NotPositiveDefinite when the normalizer is too small.
MetricSample metric_matrix(const ConeDivisorConfig& cfg, const CVector& z, double eps,
                           int chart = 0);

/// Max-norm residual between centered second differences of the scalar
/// chi_j(eps^2 + |s_j|^2) and the closed-form coefficient matrix of its i ddbar.
/// Decays at second order in the step.
double ddbar_identity_residual(const ConeDivisorConfig& cfg, int factor_index,
                               const CVector& z, double eps, double step, int chart = 0);

struct AsymptoticsRow {
  double epsilon;
  double radius;
  int axis;
  double a;              // eps^2 + |z^axis|^2 at the sample
  double diag_value;     // g^{kk} * a^(tau_k - 1)
  double diag_error;     // |diag_value - 1|
  double offdiag_ratio;  // max over l != k of |g^{kl}| / (a_k^(1-tau_k) a_l^(1-tau_l))
};

struct AsymptoticsReport {
  std::vector<AsymptoticsRow> rows;
  std::vector<double> fitted_exponent;  // per factor axis: log-log slope of diag_error vs a
  double offdiag_sup = 0;
};

/// Samples the inverse metric along ray_direction at the given radii and eps
/// values; fits the error exponent of the diagonal normalization (expected
/// 1 - tau_k) and reports the weighted off-diagonal supremum. Local model only.
AsymptoticsReport inverse_asymptotics_report(const ConeDivisorConfig& cfg,
                                             const CVector& ray_direction,
                                             const std::vector<double>& epsilon_list,
                                             const std::vector<double>& radius_list);

/// Largest gamma in (0,1] with g_eps >= gamma * omega over the sample set and
/// eps values; computed once per configuration.
double domination_gamma(const ConeDivisorConfig& cfg, const std::vector<double>& epsilon_list,
                        const std::vector<CVector>& samples, int chart = 0);

/// Deterministic low-discrepancy sample points in the local polydisc (or chart
/// disk), kept at least `margin` away from every factor locus.
std::vector<CVector> audit_samples(const ConeDivisorConfig& cfg, int count, double margin);

}  // namespace conekit
