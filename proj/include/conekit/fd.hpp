#pragma once

#include <vector>

#include "conekit/types.hpp"

namespace conekit {

/// First and mixed-second Wirtinger derivatives of a map C^n -> T computed by
/// centered differences at real step h. T must be complex-valued (Complex or
/// CMatrix); wrap real scalars as Complex before differentiating.
template <class T>
struct WirtingerJet2 {
  T value;
  std::vector<T> dz;                  // d/dz^r, r = 0..n-1
  std::vector<std::vector<T>> ddbar;  // d^2 / dz^r dzbar^s
};

namespace detail {
inline Complex zero_like(const Complex&) { return Complex(0, 0); }
inline CMatrix zero_like(const CMatrix& m) { return CMatrix::Zero(m.rows(), m.cols()); }
}  // namespace detail

template <class T, class F>
WirtingerJet2<T> wirtinger_jet2(const F& f, const CVector& z, double h) {
  const int n = static_cast<int>(z.size());
  const int d = 2 * n;  // real coordinates ordered x_0, y_0, x_1, y_1, ...
  auto shift = [&](int a, double s) {
    CVector w = z;
    w(a / 2) += (a % 2 == 0) ? Complex(s, 0) : Complex(0, s);
    return w;
  };

  WirtingerJet2<T> jet;
  jet.value = f(z);
  const T zero = detail::zero_like(jet.value);

  std::vector<T> plus(d, zero), minus(d, zero), grad(d, zero);
  for (int a = 0; a < d; ++a) {
    plus[a] = f(shift(a, h));
    minus[a] = f(shift(a, -h));
    grad[a] = (plus[a] - minus[a]) / (2 * h);
  }

  std::vector<std::vector<T>> hess(d, std::vector<T>(d, zero));
  for (int a = 0; a < d; ++a)
    hess[a][a] = (plus[a] + minus[a] - 2.0 * jet.value) / (h * h);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      CVector pp = shift(a, h), pm = shift(a, h), mp = shift(a, -h), mm = shift(a, -h);
      const Complex db = (b % 2 == 0) ? Complex(h, 0) : Complex(0, h);
      pp(b / 2) += db;
      pm(b / 2) -= db;
      mp(b / 2) += db;
      mm(b / 2) -= db;
      hess[a][b] = (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * h * h);
      hess[b][a] = hess[a][b];
    }

  // d/dz = (d/dx - i d/dy)/2; d^2/dz^r dzbar^s = ((Hxx + Hyy) + i (Hxy - Hyx)) / 4.
  const Complex I(0, 1);
  jet.dz.assign(n, zero);
  jet.ddbar.assign(n, std::vector<T>(n, zero));
  for (int r = 0; r < n; ++r)
    jet.dz[r] = 0.5 * grad[2 * r] - (0.5 * I) * grad[2 * r + 1];
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      jet.ddbar[r][s] = 0.25 * (hess[2 * r][2 * s] + hess[2 * r + 1][2 * s + 1]) +
                        (0.25 * I) * (hess[2 * r][2 * s + 1] - hess[2 * r + 1][2 * s]);
  return jet;
}

/// Two-stage Richardson extrapolation over steps h, h/2, h/4; the centered
/// O(h^2) truncation drops to O(h^6) while the stencil stays within |dz| <= h.
template <class T, class F>
WirtingerJet2<T> richardson_jet2(const F& f, const CVector& z, double h) {
  const WirtingerJet2<T> a = wirtinger_jet2<T>(f, z, h);
  const WirtingerJet2<T> b = wirtinger_jet2<T>(f, z, h / 2);
  const WirtingerJet2<T> c = wirtinger_jet2<T>(f, z, h / 4);
  const int n = static_cast<int>(z.size());
  auto extrap = [](const T& fh, const T& fh2, const T& fh4) {
    const T b1 = (4.0 * fh2 - fh) / 3.0;
    const T b2 = (4.0 * fh4 - fh2) / 3.0;
    return T((16.0 * b2 - b1) / 15.0);
  };
  WirtingerJet2<T> out;
  out.value = a.value;
  out.dz.assign(n, detail::zero_like(a.value));
  out.ddbar.assign(n, std::vector<T>(n, detail::zero_like(a.value)));
  for (int r = 0; r < n; ++r) {
    out.dz[r] = extrap(a.dz[r], b.dz[r], c.dz[r]);
    for (int s = 0; s < n; ++s)
      out.ddbar[r][s] = extrap(a.ddbar[r][s], b.ddbar[r][s], c.ddbar[r][s]);
  }
  return out;
}

}  // namespace conekit
