#pragma once

#include <stdexcept>
#include <string>

namespace crowdflux {

// Configuration / input validation problems. CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures (instability, pathological step sizes). CLI exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace crowdflux
