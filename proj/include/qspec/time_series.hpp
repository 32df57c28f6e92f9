#ifndef QSPEC_TIME_SERIES_HPP
#define QSPEC_TIME_SERIES_HPP

#include <cstddef>
#include <vector>

namespace qspec {

/// Minimum series length accepted by any spectral operation.
inline constexpr std::size_t kMinSeriesLength = 8;

/// Real-valued, fixed-interval samples. The sample index is 1-based in all
/// trigonometric designs (t = 1..n).
struct TimeSeries {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t t) const { return values[t]; }
};

/// Fourier frequencies omega_l = l/n, l = 0..n-1, in cycles per sample.
struct FrequencyGrid {
  std::size_t n = 0;

  double omega(std::size_t l) const { return static_cast<double>(l) / static_cast<double>(n); }

  /// One-sided evaluation set for estimates and divergence metrics:
  /// l = 1..floor(n/2)-1, excluding 0 and Nyquist.
  std::size_t eval_count() const { return n / 2 > 0 ? n / 2 - 1 : 0; }
};

/// Checks the TimeSeries invariants (finite values, n >= 8) and returns the
/// series unchanged. Throws error{non_finite, too_short}.
const TimeSeries& validate(const TimeSeries& ts);

/// Subtracts a natural cubic smoothing-spline fit over the index t = 1..n.
/// `stiffness` is the roughness-penalty weight with the index rescaled to
/// [0,1]; larger values remove only slower trends.
TimeSeries detrend_spline(const TimeSeries& ts, double stiffness);

/// Penalty value whose smoothing spline on n equally spaced points has the
/// requested equivalent degrees of freedom (trace of the smoother matrix).
double detrend_stiffness_for_edf(std::size_t n, double edf);

/// Default detrending stiffness: equivalent degrees of freedom ~= 4.
double default_detrend_stiffness(std::size_t n);

} // namespace qspec

#endif
