#include "conekit/divisor.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "conekit/util.hpp"

namespace conekit {

double QuadraticWeight::value(const CVector& z) const {
  if (trivial()) return 0.0;
  const Complex v = (z.adjoint() * coeff * z)(0, 0);
  return v.real();
}

CVector QuadraticWeight::holo_gradient(const CVector& z) const {
  if (trivial()) return CVector::Zero(z.size());
  // d/dz^p of sum H(k,l) z^k conj(z^l) = sum_l H(p,l) conj(z^l)
  return coeff * z.conjugate();
}

void ConeDivisorConfig::finalize() {
  if (dimension < 1 || dimension > 4)
    throw SchemaViolation("dimension must lie in 1..4");
  if (kind == ModelKind::Sphere) {
    if (dimension != 1) throw SchemaViolation("sphere model requires dimension 1");
    if (background != Background::FubiniStudySphere)
      throw SchemaViolation("sphere model requires the Fubini-Study background");
    for (size_t a = 0; a < factors.size(); ++a)
      for (size_t b = a + 1; b < factors.size(); ++b)
        if (std::abs(factors[a].point - factors[b].point) < 1e-12)
          throw SchemaViolation("cone points must be distinct");
  } else {
    if (background != Background::FlatPolydisc)
      throw SchemaViolation("local model requires the flat polydisc background");
    if (factor_count() > dimension)
      throw SchemaViolation("local model admits at most one factor per coordinate");
    std::vector<bool> used(dimension, false);
    for (const auto& f : factors) {
      if (f.axis < 0 || f.axis >= dimension) throw SchemaViolation("factor axis out of range");
      if (used[f.axis]) throw SchemaViolation("duplicate factor axis");
      used[f.axis] = true;
      if (!f.weight.trivial() &&
          (f.weight.coeff.rows() != dimension || f.weight.coeff.cols() != dimension))
        throw SchemaViolation("weight matrix must be dimension x dimension");
    }
  }
  for (const auto& f : factors) {
    if (!(f.tau > 0.0 && f.tau < 1.0)) throw SchemaViolation("tau must lie in (0,1)");
    if (f.tau > 0.5 && !allow_unsafe_tau)
      throw UnsafeTau("tau = " + std::to_string(f.tau) +
                      " exceeds 1/2; pass allow-unsafe-tau to explore anyway");
  }
  if (!(omega_scale > 0)) throw SchemaViolation("omega scale must be positive");
  if (normalizer <= 0) normalizer = auto_normalizer(*this);
}

CMatrix ConeDivisorConfig::background_metric(const CVector& z, int /*chart*/) const {
  if (kind == ModelKind::Local)
    return CMatrix::Identity(dimension, dimension);
  const double d = 1.0 + std::norm(z(0));
  CMatrix g(1, 1);
  g(0, 0) = omega_scale * 2.0 / (d * d);
  return g;
}

SectionJet ConeDivisorConfig::section_jet(int j, const CVector& z, int chart) const {
  const DivisorFactor& f = factors.at(j);
  SectionJet jet;
  if (kind == ModelKind::Local) {
    const Complex sigma = z(f.axis);
    const double phi = f.weight.value(z);
    const double emphi = std::exp(-phi);
    jet.s2 = std::norm(sigma) * emphi;
    const CVector dphi = f.weight.holo_gradient(z);
    CVector v = -sigma * dphi;
    v(f.axis) += 1.0;
    jet.dprime = std::sqrt(emphi) * v;
    jet.curvature = f.weight.trivial() ? CMatrix::Zero(dimension, dimension)
                                       : CMatrix(f.weight.coeff);
    jet.dlog_s2 = dimension == 1 && std::abs(sigma) > 0 ? 1.0 / sigma - dphi(0) : Complex(0, 0);
    return jet;
  }

  // Sphere: section of the degree-1 bundle vanishing at f.point, carrying the
  // standard metric rescaled by section_scale. In chart 0 sigma = z - p, in
  // chart 1 sigma = 1 - p w; both share the weight log((1+|.|^2)(1+|p|^2)/scale).
  const Complex w = z(0);
  const Complex p = f.point;
  const double dp = 1.0 + std::norm(p);
  const double dz = 1.0 + std::norm(w);
  const Complex sigma = chart == 0 ? w - p : 1.0 - p * w;
  const double emphi = section_scale / (dz * dp);
  jet.s2 = std::norm(sigma) * emphi;
  const Complex numer = chart == 0 ? 1.0 + std::conj(w) * p : -(p + std::conj(w));
  jet.dprime = CVector::Constant(1, std::sqrt(emphi) * numer / dz);
  CMatrix theta(1, 1);
  theta(0, 0) = 1.0 / (dz * dz);  // i ddbar log(1+|w|^2)
  jet.curvature = theta;
  jet.dlog_s2 = (std::abs(sigma) > 0 ? 1.0 / sigma : Complex(0, 0)) *
                    (chart == 0 ? Complex(1, 0) : -p) -
                std::conj(w) / dz;
  return jet;
}

double auto_normalizer(const ConeDivisorConfig& cfg) {
  if (cfg.factors.empty()) return 1.0;
  // Deterministic sample set: Halton points in the polydisc / chart disks.
  std::vector<CVector> samples;
  const int n = cfg.dimension;
  for (int i = 0; i < 64; ++i) {
    CVector z(n);
    for (int k = 0; k < n; ++k) {
      const double re = 2.0 * halton(i, 2 + 2 * k) - 1.0;
      const double im = 2.0 * halton(i, 3 + 2 * k) - 1.0;
      z(k) = Complex(re, im) * (cfg.kind == ModelKind::Sphere ? 1.2 : 1.0);
    }
    samples.push_back(z);
  }
  double sup = 0;
  const int charts = cfg.kind == ModelKind::Sphere ? 2 : 1;
  for (int chart = 0; chart < charts; ++chart) {
    for (const auto& z : samples) {
      const CMatrix gw = cfg.background_metric(z, chart);
      for (int j = 0; j < cfg.factor_count(); ++j) {
        const auto& f = cfg.factors[j];
        const SectionJet jet = cfg.section_jet(j, z, chart);
        // Coefficient of the curvature term at eps = 0 (the extreme case).
        const double c = std::pow(jet.s2, f.tau) / f.tau;
        Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(jet.curvature, gw);
        double lmax = 0;
        for (int k = 0; k < es.eigenvalues().size(); ++k)
          lmax = std::max(lmax, es.eigenvalues()(k));
        sup = std::max(sup, c * lmax);
      }
    }
  }
  return 2.0 * cfg.factor_count() * sup + 1.0;
}

}  // namespace conekit
