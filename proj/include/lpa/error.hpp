#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

// Library-wide error type. Parse errors carry "line:col:" prefixes in the
// message; contract violations (mixed rings, mixed contexts, bad input)
// carry a short description of the offending value.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lpa
