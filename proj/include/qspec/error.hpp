#ifndef QSPEC_ERROR_HPP
#define QSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qspec {

enum class errc {
  non_finite,
  too_short,
  invalid_tau,
  invalid_frequency,
  no_convergence,
  asymmetric_input,
  singular_toeplitz,
  empty_ladder,
  mismatched_ladders,
  non_causal_pacf,
  non_causal_coeffs,
  zero_spectrum,
  too_few_points,
  unordered_x,
  negative_ordinate,
  non_positive_bandwidth,
  not_normalized,
  non_positive_entry,
  length_mismatch,
  window_too_long,
  invalid_argument,
  io_error,
};

/// Library-wide exception carrying a machine-checkable error code.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace qspec

#endif
