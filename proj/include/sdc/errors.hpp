#pragma once

#include <stdexcept>
#include <string>

namespace sdc {

/// A degreewise computation was asked for data outside the reliable
/// truncation window.
struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid mathematical input (non-homogeneous generator, bad shift, ...).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace sdc
