#include "conekit/chi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace conekit {
namespace {

void check_domain(double tau, double eps, double t) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("chi: tau must lie in (0,1)");
  if (eps < 0.0) throw std::domain_error("chi: eps must be >= 0");
  if (t < 0.0) throw std::domain_error("chi: t must be >= 0");
}

// Integrand ((eps^2+r)^tau - eps^(2 tau)) / r, written through expm1/log1p so the
// cancellation for r << eps^2 is harmless. Removable singularity at r = 0.
double integrand(double tau, double eps2, double pow_eps2_tau, double r) {
  if (r == 0.0) return tau * pow_eps2_tau / eps2;
  return pow_eps2_tau * std::expm1(tau * std::log1p(r / eps2)) / r;
}

// integral_0^m of the integrand via the binomial series of (1+x)^tau, x = r/eps^2.
// Geometric convergence for m <= eps^2 / 2.
double series_integral(double tau, double eps2, double pow_eps2_tau, double m) {
  const double x = m / eps2;
  double coeff = tau;  // binom(tau, 1)
  double xk = x;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double term = coeff * xk / k;
    sum += term;
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) break;
    coeff *= (tau - k) / (k + 1);
    xk *= x;
  }
  return pow_eps2_tau * sum;
}

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GkResult {
  double value;
  double error;
};

template <class F>
GkResult gauss_kronrod(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double k = 0, g = 0;
  for (int i = 0; i < 7; ++i) k += kWk[i] * (fv[i] + fv[14 - i]);
  k += kWk[7] * fv[7];
  for (int i = 0; i < 3; ++i) g += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  g += kWg[3] * fv[7];
  return {k * h, std::abs((k - g) * h)};
}

template <class F>
double adaptive_quadrature(const F& f, double a, double b, double abs_tol) {
  struct Seg {
    double a, b, value, error;
  };
  std::vector<Seg> stack;
  auto push = [&](double lo, double hi) {
    const GkResult r = gauss_kronrod(f, lo, hi);
    stack.push_back({lo, hi, r.value, r.error});
  };
  // Graded initial split: the integrand varies on scale ~a near the left end.
  std::vector<double> knots{a};
  for (double x = std::max(a, 1e-300) * 4.0; x < b; x *= 4.0) knots.push_back(x);
  knots.push_back(b);
  for (size_t i = 0; i + 1 < knots.size(); ++i) push(knots[i], knots[i + 1]);

  for (int iter = 0; iter < 4000; ++iter) {
    double total_err = 0;
    size_t worst = 0;
    for (size_t i = 0; i < stack.size(); ++i) {
      total_err += stack[i].error;
      if (stack[i].error > stack[worst].error) worst = i;
    }
    if (total_err <= abs_tol) break;
    const Seg s = stack[worst];
    stack.erase(stack.begin() + worst);
    const double mid = 0.5 * (s.a + s.b);
    push(s.a, mid);
    push(mid, s.b);
  }
  double total = 0;
  for (const auto& s : stack) total += s.value;
  return total;
}

}  // namespace

double chi_eval(double tau, double eps, double t) {
  check_domain(tau, eps, t);
  if (t == 0.0) return 0.0;
  if (eps == 0.0) return std::pow(t, tau) / (tau * tau);  // exact limit of the integral

  const double eps2 = eps * eps;
  const double pow_eps2_tau = std::pow(eps2, tau);
  const double m = std::min(t, 0.5 * eps2);
  double integral = series_integral(tau, eps2, pow_eps2_tau, m);
  if (t > m) {
    auto f = [&](double r) { return integrand(tau, eps2, pow_eps2_tau, r); };
    integral += adaptive_quadrature(f, m, t, 1e-13 * (1.0 + std::abs(integral)));
  }
  return integral / tau;
}

ChiDerivatives chi_derivatives(double tau, double eps, double t) {
  check_domain(tau, eps, t);
  if (t == 0.0 && eps == 0.0)
    throw std::domain_error("chi_derivatives: singular at t = eps = 0");

  const double eps2 = eps * eps;
  const double x = eps > 0.0 ? t / eps2 : std::numeric_limits<double>::infinity();

  if (eps > 0.0 && x < 0.5) {
    // Series about t = 0: chi' = eps^(2tau-2)/tau * sum_{k>=1} binom(tau,k) x^(k-1),
    // chi'' = eps^(2tau-4) * sum_{j>=1} [binom(tau-1,j) - binom(tau,j+1)/tau] x^(j-1).
    const double p2 = std::pow(eps2, tau - 1.0);
    const double p4 = std::pow(eps2, tau - 2.0);
    double b_tau = tau;         // binom(tau, k), starting at k = 1
    double b_tau1 = tau - 1.0;  // binom(tau-1, j), starting at j = 1
    double first_sum = b_tau;
    double second_sum = 0.0;
    double xpow = 1.0;  // x^(k-2) entering iteration k
    for (int k = 2; k < 300; ++k) {
      b_tau *= (tau - (k - 1)) / k;  // binom(tau, k)
      const double c2 = b_tau1 - b_tau / tau;
      second_sum += c2 * xpow;
      xpow *= x;
      const double t1 = b_tau * xpow;
      first_sum += t1;
      if (k > 4 && std::abs(t1) + std::abs(c2 * xpow) <
                       1e-18 * (1.0 + std::abs(first_sum) + std::abs(second_sum)))
        break;
      b_tau1 *= (tau - k) / k;  // binom(tau-1, k)
    }
    return {p2 * first_sum / tau, p4 * second_sum};
  }

  const double u = eps2 + t;
  const double diff = eps > 0.0
                          ? std::pow(eps2, tau) * std::expm1(tau * std::log1p(x))
                          : std::pow(t, tau);
  const double first = diff / (tau * t);
  const double second = std::pow(u, tau - 1.0) / t - diff / (tau * t * t);
  return {first, second};
}

}  // namespace conekit
