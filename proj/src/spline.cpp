#include "qspec/spline.hpp"

#include <cmath>
#include <cstddef>

#include "qspec/error.hpp"

namespace qspec {

// Reinsch form: the fit is f = y - penalty * Q * gamma with
// (R + penalty * Q^T Q) gamma = Q^T y, where Q^T is the second-difference
// operator and R the Gram matrix of the natural-spline basis. The system is
// pentadiagonal, solved by banded LDL^T. The leverage values come from the
// central band of the inverse (Hutchinson & de Hoog recurrences), so the
// whole fit is O(n).
SplineFit smoothing_spline(std::span<const double> x, std::span<const double> y, double penalty) {
  const std::size_t n = x.size();
  if (n != y.size()) fail(errc::length_mismatch, "smoothing_spline: x/y size mismatch");
  if (n < 3) fail(errc::too_few_points, "smoothing_spline: need at least 3 points");
  if (!(penalty >= 0.0) || !std::isfinite(penalty))
    fail(errc::invalid_argument, "smoothing_spline: penalty must be finite and >= 0");

  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x[i + 1] > x[i])) fail(errc::unordered_x, "smoothing_spline: x must be strictly increasing");

  const std::size_t m = n - 2;
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x[i + 1] - x[i];

  // Q^T row j has entries (a_j, b_j, c_j) at sample columns j, j+1, j+2.
  std::vector<double> qa(m), qb(m), qc(m);
  for (std::size_t j = 0; j < m; ++j) {
    qa[j] = 1.0 / h[j];
    qc[j] = 1.0 / h[j + 1];
    qb[j] = -qa[j] - qc[j];
  }

  // Bands of B = R + penalty * Q^T Q.
  std::vector<double> e0(m), e1(m > 1 ? m - 1 : 0), e2(m > 2 ? m - 2 : 0);
  for (std::size_t j = 0; j < m; ++j)
    e0[j] = (h[j] + h[j + 1]) / 3.0 + penalty * (qa[j] * qa[j] + qb[j] * qb[j] + qc[j] * qc[j]);
  for (std::size_t j = 0; j + 1 < m; ++j)
    e1[j] = h[j + 1] / 6.0 + penalty * (qb[j] * qa[j + 1] + qc[j] * qb[j + 1]);
  for (std::size_t j = 0; j + 2 < m; ++j) e2[j] = penalty * qc[j] * qa[j + 2];

  std::vector<double> g(m);
  for (std::size_t j = 0; j < m; ++j)
    g[j] = (y[j + 2] - y[j + 1]) / h[j + 1] - (y[j + 1] - y[j]) / h[j];

  // Banded LDL^T: L[j+1][j] = u[j], L[j+2][j] = v[j], D = diag(d).
  std::vector<double> d(m), u(m, 0.0), v(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double dj = e0[j];
    if (j >= 1) dj -= u[j - 1] * u[j - 1] * d[j - 1];
    if (j >= 2) dj -= v[j - 2] * v[j - 2] * d[j - 2];
    d[j] = dj;
    if (!(dj > 0.0)) fail(errc::invalid_argument, "smoothing_spline: system not positive definite");
    if (j + 1 < m) {
      double t = e1[j];
      if (j >= 1) t -= u[j - 1] * d[j - 1] * v[j - 1];
      u[j] = t / dj;
    }
    if (j + 2 < m) v[j] = e2[j] / dj;
  }

  // Solve B gamma = g.
  std::vector<double> gamma(m);
  for (std::size_t j = 0; j < m; ++j) {
    double t = g[j];
    if (j >= 1) t -= u[j - 1] * gamma[j - 1];
    if (j >= 2) t -= v[j - 2] * gamma[j - 2];
    gamma[j] = t;
  }
  for (std::size_t j = 0; j < m; ++j) gamma[j] /= d[j];
  for (std::size_t j = m; j-- > 0;) {
    if (j + 1 < m) gamma[j] -= u[j] * gamma[j + 1];
    if (j + 2 < m) gamma[j] -= v[j] * gamma[j + 2];
  }

  SplineFit fit;
  fit.fitted.assign(y.begin(), y.end());
  for (std::size_t j = 0; j < m; ++j) {
    fit.fitted[j] -= penalty * qa[j] * gamma[j];
    fit.fitted[j + 1] -= penalty * qb[j] * gamma[j];
    fit.fitted[j + 2] -= penalty * qc[j] * gamma[j];
  }

  // Central band of W = B^{-1}: w0 diagonal, w1 first, w2 second superdiagonal.
  std::vector<double> w0(m), w1(m, 0.0), w2(m, 0.0);
  for (std::size_t jj = m; jj-- > 0;) {
    const std::size_t j = jj;
    if (j + 2 < m) w2[j] = -u[j] * w1[j + 1] - v[j] * w0[j + 2];
    if (j + 1 < m) w1[j] = -u[j] * w0[j + 1] - (j + 2 < m ? v[j] * w1[j + 1] : 0.0);
    w0[j] = 1.0 / d[j] - (j + 1 < m ? u[j] * w1[j] : 0.0) - (j + 2 < m ? v[j] * w2[j] : 0.0);
  }

  // leverage_i = 1 - penalty * q_i^T W q_i with q_i the i-th row of Q.
  fit.leverage.assign(n, 1.0);
  auto wband = [&](std::size_t a, std::size_t b) -> double {
    if (a > b) std::swap(a, b);
    const std::size_t off = b - a;
    if (off == 0) return w0[a];
    if (off == 1) return w1[a];
    return w2[a];
  };
  for (std::size_t i = 0; i < n; ++i) {
    // Row i of Q: value qa[i] at column i, qb[i-1] at i-1, qc[i-2] at i-2.
    double cols[3];
    double vals[3];
    int k = 0;
    if (i < m) {
      cols[k] = static_cast<double>(i);
      vals[k++] = qa[i];
    }
    if (i >= 1 && i - 1 < m) {
      cols[k] = static_cast<double>(i - 1);
      vals[k++] = qb[i - 1];
    }
    if (i >= 2 && i - 2 < m) {
      cols[k] = static_cast<double>(i - 2);
      vals[k++] = qc[i - 2];
    }
    double quad = 0.0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        quad += vals[a] * vals[b] * wband(static_cast<std::size_t>(cols[a]), static_cast<std::size_t>(cols[b]));
    fit.leverage[i] = 1.0 - penalty * quad;
  }
  fit.trace = 0.0;
  for (double lv : fit.leverage) fit.trace += lv;
  return fit;
}

} // namespace qspec
