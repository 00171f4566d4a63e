#pragma once

#include <stdexcept>
#include <string>

namespace supercat {

/// Raised when an exact division that must be exact leaves a remainder, or
/// when two routes to the same value disagree. Never caused by user input.
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

} // namespace supercat
