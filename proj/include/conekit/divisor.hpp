#pragma once

#include "conekit/types.hpp"

namespace conekit {

enum class ModelKind { Local, Sphere };
enum class Background { FlatPolydisc, FubiniStudySphere };

/// Hermitian quadratic weight phi(z) = sum_{k,l} H(k,l) z^k conj(z^l) used for the
/// line-bundle metrics of the local polydisc model. H must be Hermitian.
struct QuadraticWeight {
  CMatrix coeff;  // empty means phi == 0

  bool trivial() const { return coeff.size() == 0; }
  double value(const CVector& z) const;
  CVector holo_gradient(const CVector& z) const;  // d phi / d z^p
};

struct DivisorFactor {
  double tau = 0.5;
  // Local model: the locus is {z^axis = 0}. Sphere model: cone point in chart-0
  // coordinates (finite; the chart-1 expression is derived).
  int axis = 0;
  Complex point{0, 0};
  QuadraticWeight weight;
};

/// Pointwise data of one section s_j in the chart trivialization: everything the
/// metric family needs at a single evaluation point.
struct SectionJet {
  double s2 = 0;           // |s|^2
  CVector dprime;          // v with <D's, D's>_{p qbar} = v(p) * conj(v(q))
  CMatrix curvature;       // Theta_{p qbar} of (L, h) in the trivialization
  Complex dlog_s2{0, 0};   // d/dz log |s|^2 (n = 1 charts; used by cutoffs)
};

struct ConeDivisorConfig {
  int dimension = 1;
  ModelKind kind = ModelKind::Local;
  Background background = Background::FlatPolydisc;
  std::vector<DivisorFactor> factors;
  double normalizer = 0;   // <= 0 requests the automatic rule
  double omega_scale = 1;  // sphere mode: omega = omega_scale * omega_FS
  bool allow_unsafe_tau = false;

  /// Validates invariants and resolves the automatic normalizer. Must be called
  /// once after construction; throws UnsafeTau / SchemaViolation on bad data.
  void finalize();

  bool finalized() const { return normalizer > 0; }
  int factor_count() const { return static_cast<int>(factors.size()); }

  /// Sphere sections carry the degree-1 metric scaled so |s_j|^2 <= exp(-1).
  static constexpr double section_scale = 0.36787944117144233;  // exp(-1)

  /// Background metric coefficient matrix at z (chart 0 or 1 in sphere mode).
  CMatrix background_metric(const CVector& z, int chart = 0) const;

  /// Section data of factor j at z in the given chart.
  SectionJet section_jet(int j, const CVector& z, int chart = 0) const;
};

/// The automatic normalizer: 2 * (#factors) * (sup over a fixed sample set of the
/// positive part of the curvature-term coefficients, measured against omega) + 1.
double auto_normalizer(const ConeDivisorConfig& cfg);

}  // namespace conekit
