// Shared aliases, constants and error types.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wwl {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr const char* kVersion = "0.1.0";

// Configuration file / key-value problems. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched grids, incompatible parameters, wrong array sizes.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation not supported for this representation (e.g. direct translation
// of a sampled field at an off-grid lateral offset).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural assumption of the wavelet machinery is violated
// (non-admissible wavelet, vanishing cross constant). CLI exit code 3.
struct AssumptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wwl
