#pragma once

#include <stdexcept>
#include <string>

namespace pconn {

// Input failed schema or contract validation.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request exceeds a configured enumeration bound.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not available in the requested mode.
struct UnsupportedMode : std::runtime_error {
    explicit UnsupportedMode(const std::string& msg) : std::runtime_error(msg) {}
};

// A certificate the engine produced failed its own re-verification.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace pconn
