#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdeboot {

// Error categories surfaced by the library. The CLI maps these to the
// machine-readable "code" field of its error JSON.
enum class errc {
  dimension_mismatch,
  invalid_parameter,
  unsupported_kind,
  divergence,
  singular_scale,
  degenerate_data,
  fit_failure,
  divisibility,
  bootstrap_draw,
  bootstrap_distribution,
  singular_normalization,
  experiment_failure,
  io_failure,
  config_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Thrown by the simulator when the state leaves the finite range; carries the
// 1-based observation index at which the blow-up was detected.
class DivergenceError : public Error {
public:
  DivergenceError(std::size_t step, const std::string& what)
      : Error(errc::divergence, what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

private:
  std::size_t step_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sdeboot
