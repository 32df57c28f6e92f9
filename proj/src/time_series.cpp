#include "qspec/time_series.hpp"

#include <cmath>
#include <string>

#include "qspec/error.hpp"
#include "qspec/spline.hpp"

namespace qspec {

const TimeSeries& validate(const TimeSeries& ts) {
  if (ts.size() < kMinSeriesLength)
    fail(errc::too_short, "series too short: n=" + std::to_string(ts.size()) + " < " +
                              std::to_string(kMinSeriesLength));
  for (std::size_t t = 0; t < ts.size(); ++t)
    if (!std::isfinite(ts.values[t]))
      fail(errc::non_finite, "non-finite sample at index " + std::to_string(t));
  return ts;
}

namespace {
std::vector<double> unit_index(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t t = 0; t < n; ++t) x[t] = static_cast<double>(t) / static_cast<double>(n - 1);
  return x;
}
} // namespace

TimeSeries detrend_spline(const TimeSeries& ts, double stiffness) {
  validate(ts);
  if (!(stiffness > 0.0) || !std::isfinite(stiffness))
    fail(errc::invalid_argument, "detrend_spline: stiffness must be positive");
  const std::size_t n = ts.size();
  const auto x = unit_index(n);
  const SplineFit fit = smoothing_spline(x, ts.values, stiffness);
  TimeSeries out;
  out.values.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.values[t] = ts.values[t] - fit.fitted[t];
  return out;
}

double detrend_stiffness_for_edf(std::size_t n, double edf) {
  if (n < kMinSeriesLength) fail(errc::too_short, "detrend_stiffness_for_edf: series too short");
  if (!(edf > 2.0) || edf >= static_cast<double>(n))
    fail(errc::invalid_argument, "detrend_stiffness_for_edf: edf must be in (2, n)");
  const auto x = unit_index(n);
  const std::vector<double> y(n, 0.0);
  // tr S(penalty) decreases monotonically from n to 2; bisect on log10.
  double lo = -14.0, hi = 14.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double tr = smoothing_spline(x, y, std::pow(10.0, mid)).trace;
    if (tr > edf)
      lo = mid;
    else
      hi = mid;
  }
  return std::pow(10.0, 0.5 * (lo + hi));
}

double default_detrend_stiffness(std::size_t n) { return detrend_stiffness_for_edf(n, 4.0); }

} // namespace qspec
