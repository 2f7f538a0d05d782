#include "conekit/geometry.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "conekit/chi.hpp"
#include "conekit/fd.hpp"
#include "conekit/util.hpp"

namespace conekit {
namespace {

// ((eps^2 + t)^tau - eps^(2 tau)) evaluated without cancellation.
double pow_diff(double tau, double eps, double t) {
  if (eps == 0.0) return std::pow(t, tau);
  const double eps2 = eps * eps;
  return std::pow(eps2, tau) * std::expm1(tau * std::log1p(t / eps2));
}

}  // namespace

double regularized_potential(const ConeDivisorConfig& cfg, const CVector& z, double eps,
                             int chart) {
  double psi = 0;
  for (int j = 0; j < cfg.factor_count(); ++j) {
    const SectionJet jet = cfg.section_jet(j, z, chart);
    if (eps == 0.0 && jet.s2 == 0.0) continue;  // chi(0) = 0
    psi += chi_eval(cfg.factors[j].tau, eps, jet.s2);
  }
  return psi / cfg.normalizer;
}

MetricSample metric_matrix(const ConeDivisorConfig& cfg, const CVector& z, double eps,
                           int chart) {
  const int n = cfg.kind == ModelKind::Sphere ? 1 : cfg.dimension;
  MetricSample out;
  out.point = z;
  out.epsilon = eps;
  CMatrix g = cfg.background_metric(z, chart);
  double psi = 0;
  for (int j = 0; j < cfg.factor_count(); ++j) {
    const auto& f = cfg.factors[j];
    const SectionJet jet = cfg.section_jet(j, z, chart);
    const double a = eps * eps + jet.s2;
    if (a == 0.0)
      throw OnDivisor("metric requested at a locus with eps = 0");
    const double cone = std::pow(a, f.tau - 1.0);
    const double curv_coeff = pow_diff(f.tau, eps, jet.s2) / f.tau;
    g.noalias() += (cone / cfg.normalizer) * (jet.dprime * jet.dprime.adjoint());
    g.noalias() -= (curv_coeff / cfg.normalizer) * jet.curvature;
    psi += chi_eval(f.tau, eps, jet.s2);
  }
  g = 0.5 * (g + g.adjoint().eval());  // exact Hermitian symmetry
  Eigen::LLT<CMatrix> llt(g);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("metric lost positivity; normalizer " +
                              std::to_string(cfg.normalizer) + " is too small for this data");
  out.g = g;
  CMatrix inv = llt.solve(CMatrix::Identity(n, n));
  out.g_inv = 0.5 * (inv + inv.adjoint().eval());
  out.psi = psi / cfg.normalizer;
  return out;
}

double ddbar_identity_residual(const ConeDivisorConfig& cfg, int factor_index, const CVector& z,
                               double eps, double step, int chart) {
  const auto& f = cfg.factors.at(factor_index);
  auto scalar = [&](const CVector& w) {
    const SectionJet jet = cfg.section_jet(factor_index, w, chart);
    return Complex(chi_eval(f.tau, eps, jet.s2), 0.0);
  };
  const auto jet2 = wirtinger_jet2<Complex>(scalar, z, step);

  const SectionJet jet = cfg.section_jet(factor_index, z, chart);
  const double a = eps * eps + jet.s2;
  const double cone = std::pow(a, f.tau - 1.0);
  const double curv_coeff = pow_diff(f.tau, eps, jet.s2) / f.tau;
  const CMatrix closed =
      cone * (jet.dprime * jet.dprime.adjoint()) - curv_coeff * jet.curvature;

  const int n = static_cast<int>(z.size());
  double residual = 0;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      residual = std::max(residual, std::abs(jet2.ddbar[r][s] - closed(r, s)));
  return residual;
}

AsymptoticsReport inverse_asymptotics_report(const ConeDivisorConfig& cfg,
                                             const CVector& ray_direction,
                                             const std::vector<double>& epsilon_list,
                                             const std::vector<double>& radius_list) {
  if (cfg.kind != ModelKind::Local)
    throw SchemaViolation("inverse asymptotics run in the local model only");
  AsymptoticsReport report;
  CVector dir = ray_direction / ray_direction.norm();

  std::vector<std::vector<double>> log_a(cfg.factor_count());
  std::vector<std::vector<double>> log_err(cfg.factor_count());
  for (double eps : epsilon_list) {
    for (double radius : radius_list) {
      const CVector z = radius * dir;
      const MetricSample m = metric_matrix(cfg, z, eps);
      for (int j = 0; j < cfg.factor_count(); ++j) {
        const auto& f = cfg.factors[j];
        const int k = f.axis;
        const double a = eps * eps + std::norm(z(k));
        // g^{k kbar} = conj(entry (k,k) of the matrix inverse); diagonal is real.
        const double diag = m.g_inv(k, k).real() * std::pow(a, f.tau - 1.0);
        AsymptoticsRow row;
        row.epsilon = eps;
        row.radius = radius;
        row.axis = k;
        row.a = a;
        row.diag_value = diag;
        row.diag_error = std::abs(diag - 1.0);
        row.offdiag_ratio = 0;
        for (int l = 0; l < cfg.dimension; ++l) {
          if (l == k) continue;
          double tl = 1.0;  // weightless axes carry exponent 0
          for (const auto& other : cfg.factors)
            if (other.axis == l) tl = other.tau;
          const double al = eps * eps + std::norm(z(l));
          const double denom = std::pow(a, 1.0 - f.tau) * std::pow(al, 1.0 - tl);
          row.offdiag_ratio =
              std::max(row.offdiag_ratio, std::abs(m.g_inv(k, l)) / denom);
        }
        report.rows.push_back(row);
        report.offdiag_sup = std::max(report.offdiag_sup, row.offdiag_ratio);
        if (row.diag_error > 1e-14) {
          log_a[j].push_back(std::log(a));
          log_err[j].push_back(std::log(row.diag_error));
        }
      }
    }
  }
  report.fitted_exponent.assign(cfg.factor_count(), 0.0);
  for (int j = 0; j < cfg.factor_count(); ++j)
    if (log_a[j].size() >= 2) report.fitted_exponent[j] = fit_slope(log_a[j], log_err[j]);
  return report;
}

double domination_gamma(const ConeDivisorConfig& cfg, const std::vector<double>& epsilon_list,
                        const std::vector<CVector>& samples, int chart) {
  double gamma = 1.0;
  for (double eps : epsilon_list) {
    for (const auto& z : samples) {
      const MetricSample m = metric_matrix(cfg, z, eps, chart);
      const CMatrix gw = cfg.background_metric(z, chart);
      Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(m.g, gw);
      gamma = std::min(gamma, es.eigenvalues().minCoeff());
    }
  }
  return gamma;
}

std::vector<CVector> audit_samples(const ConeDivisorConfig& cfg, int count, double margin) {
  std::vector<CVector> out;
  const int n = cfg.dimension;
  uint64_t i = 0;
  while (static_cast<int>(out.size()) < count && i < 100000) {
    CVector z(n);
    for (int k = 0; k < n; ++k) {
      const double re = 2.0 * halton(i, 2 + 2 * k) - 1.0;
      const double im = 2.0 * halton(i, 3 + 2 * k) - 1.0;
      z(k) = Complex(re, im);
    }
    ++i;
    bool ok = true;
    for (const auto& f : cfg.factors) {
      const double dist = cfg.kind == ModelKind::Local ? std::abs(z(f.axis))
                                                       : std::abs(z(0) - f.point);
      if (dist < margin) ok = false;
    }
    if (ok) out.push_back(z);
  }
  return out;
}

}  // namespace conekit
