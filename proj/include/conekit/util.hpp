#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace conekit {

/// Cubic smoothstep: 0 for u <= 0, 1 for u >= 1, 3u^2 - 2u^3 in between.
template <typename Real>
Real smoothstep(Real u) {
  if (u <= Real(0)) return Real(0);
  if (u >= Real(1)) return Real(1);
  return u * u * (Real(3) - Real(2) * u);
}

template <typename Real>
Real smoothstep_deriv(Real u) {
  if (u <= Real(0) || u >= Real(1)) return Real(0);
  return Real(6) * u * (Real(1) - u);
}

/// C^2 quintic step 6u^5 - 15u^4 + 10u^3, clamped outside [0, 1].
template <typename Real>
Real quintic_step(Real u) {
  if (u <= Real(0)) return Real(0);
  if (u >= Real(1)) return Real(1);
  return u * u * u * (Real(10) + u * (Real(-15) + Real(6) * u));
}

/// Halton low-discrepancy sequence value, index i >= 0, prime base.
double halton(uint64_t i, uint32_t base);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Least-squares line y = a*x + b; returns {a, b}.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Ceiling of m * (num/den) in exact integer arithmetic, den > 0.
long long rational_ceil(long long m, long long num, long long den);

/// Ceiling with a snap-to-integer guard against float drift in the argument.
long long snapped_ceil(double x, double snap_tol = 1e-12);

/// FNV-1a hash of a byte string, hex-encoded. Used for run manifests.
std::string fnv1a_hex(const std::string& bytes);

/// Worker cap from CONEKIT_THREADS (hardware concurrency when unset).
int worker_count();

/// Runs fn(i) for i in [0, n); chunks across worker_count() threads.
/// Results must be written to disjoint slots by index so the output is
/// deterministic regardless of the thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_g17(double v);

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

}  // namespace conekit
