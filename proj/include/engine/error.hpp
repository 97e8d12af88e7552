#pragma once
#include <stdexcept>
#include <string>

namespace conic {

// Bad data coming from outside (files, flags, shape mismatches). CLI exit 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A required mathematical property failed to hold (non-cocycle twist,
// inadmissible cochain, singular block, failed witness). CLI exit 1.
struct PropertyError : std::runtime_error {
    explicit PropertyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace conic
