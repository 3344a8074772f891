#pragma once

#include <stdexcept>
#include <string>

namespace suned {

/// Bad experiment input: malformed config file, coupling signs, cap overflow.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Eigensolver did not reach the requested residual within the iteration cap.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace suned
