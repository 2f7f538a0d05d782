#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace conekit {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

// Error categories map to CLI exit codes: config = 2, solver = 3, audit = 4.
enum class ErrorKind { Config, Solver, Audit };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

#define CONEKIT_ERROR(Name, Kind)                                             \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, #Name ": " + what) {} \
  }

CONEKIT_ERROR(ParseError, Config);
CONEKIT_ERROR(SchemaViolation, Config);
CONEKIT_ERROR(UnsafeTau, Config);

CONEKIT_ERROR(NotPositiveDefinite, Solver);
CONEKIT_ERROR(OnDivisor, Solver);
CONEKIT_ERROR(DegreeMismatch, Solver);
CONEKIT_ERROR(NoConvergence, Solver);
CONEKIT_ERROR(PositivityLost, Solver);

CONEKIT_ERROR(StepUnderflow, Audit);
CONEKIT_ERROR(InconsistentFields, Audit);
CONEKIT_ERROR(TooCoarse, Audit);
CONEKIT_ERROR(AnnulusUnresolved, Audit);
CONEKIT_ERROR(NotCompactlySupported, Audit);

#undef CONEKIT_ERROR

// Dense rank-4 array R(p,qbar,r,sbar) for complex dimension n (n <= 4 in practice).
class Rank4 {
public:
  Rank4() = default;
  explicit Rank4(int n) : n_(n), v_(static_cast<size_t>(n) * n * n * n, Complex(0, 0)) {}

  int dim() const { return n_; }
  Complex& operator()(int p, int q, int r, int s) { return v_[idx(p, q, r, s)]; }
  const Complex& operator()(int p, int q, int r, int s) const { return v_[idx(p, q, r, s)]; }

  double max_abs() const {
    double m = 0;
    for (const auto& c : v_) m = std::max(m, std::abs(c));
    return m;
  }

private:
  size_t idx(int p, int q, int r, int s) const {
    return ((static_cast<size_t>(p) * n_ + q) * n_ + r) * n_ + s;
  }
  int n_ = 0;
  std::vector<Complex> v_;
};

struct MetricSample {
  CVector point;
  double epsilon = 0;
  CMatrix g;      // g_{p qbar}
  CMatrix g_inv;  // matrix inverse of g, Hermitian-symmetrized
  double psi = 0; // regularized potential at the point
};

struct CurvatureSample {
  CVector point;
  double epsilon = 0;
  Rank4 riemann;  // R_{p qbar r sbar}
  CMatrix ricci;  // R_{j ibar} = g^{p qbar}-trace of riemann
};

// Contraction sum_{j,k} g^{j kbar} T(j,k) for the inverse stored as g_inv (G * g_inv = Id).
inline Complex trace_contract(const CMatrix& g_inv, const CMatrix& t) {
  return (t * g_inv).trace();
}

}  // namespace conekit
