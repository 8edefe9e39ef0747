#pragma once

#include <stdexcept>
#include <string>

namespace greyrank {

// Malformed or out-of-contract input: bad bounds, ragged rows, unknown names.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Input was well-formed but the requested quantity is undefined for it
// (zero column sums, all-constant columns, non-convergence).
class ComputationError : public std::domain_error {
public:
    explicit ComputationError(const std::string& what) : std::domain_error(what) {}
};

} // namespace greyrank
