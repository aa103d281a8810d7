#pragma once

#include <stdexcept>
#include <string>

namespace decmon {

// Thrown when an operation would exceed one of the configured resource
// caps (exhaustive-enumeration size, brute-force dimension, channel
// alphabet growth).  Distinct from invalid_argument / domain_error so
// callers can map it to a dedicated exit code.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace decmon
