#pragma once

#include <stdexcept>
#include <string>

namespace relper {

// Failure categories shared by the library and the C API.
enum class errc {
  none = 0,
  parse,
  odd_exponent,
  non_positive_leading,
  empty_potential,
  bad_m,
  negative_amplitude,
  zero_amplitude,
  out_of_range,
  domain,
  nonzero_remainder,
  missing_lambda,
  mode_mismatch,
  overflow_risk,
  zero_reference,
  quadrature_non_convergence,
  superluminal_state,
  max_steps_exceeded,
  io,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace relper
