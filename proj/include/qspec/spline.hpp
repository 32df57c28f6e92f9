#ifndef QSPEC_SPLINE_HPP
#define QSPEC_SPLINE_HPP

#include <span>
#include <vector>

namespace qspec {

/// Natural cubic smoothing-spline fit at the data abscissae.
struct SplineFit {
  std::vector<double> fitted;   // smoothed values at x
  std::vector<double> leverage; // diagonal of the smoother matrix S
  double trace = 0.0;           // tr(S), the equivalent degrees of freedom
};

/// Fits a natural cubic smoothing spline minimizing
///   sum_i (y_i - f(x_i))^2 + penalty * int f''(x)^2 dx
/// with knots at every x_i. x must be strictly increasing, size >= 3.
/// penalty >= 0; penalty 0 interpolates. O(n) banded solve.
SplineFit smoothing_spline(std::span<const double> x, std::span<const double> y, double penalty);

} // namespace qspec

#endif
