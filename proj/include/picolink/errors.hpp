#pragma once

#include <stdexcept>
#include <string>

namespace picolink {

// Invalid input: parameter-domain, configuration, geometry and scenario
// validation failures. Maps to exit code 2 / PL_ERR_VALIDATION.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation that could not produce a result for valid input
// (non-convergence, degenerate geometry at runtime). Exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace picolink
