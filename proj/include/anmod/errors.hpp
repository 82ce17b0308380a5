#pragma once

#include <stdexcept>
#include <string>

namespace anmod {

// Bad input: non-dominant weight, malformed flags.  CLI exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

// Requested module exceeds the dimension cap.  CLI exit code 3.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};

// Two independent computations of the same quantity disagree, or a
// guaranteed structural property failed to hold.  CLI exit code 4.
struct InconsistencyError : std::logic_error {
    explicit InconsistencyError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace anmod
