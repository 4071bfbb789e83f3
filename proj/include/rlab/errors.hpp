#ifndef RLAB_ERRORS_HPP
#define RLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rlab {

// Malformed or out-of-contract input (bad file, index out of range,
// invalid degree matrix where a valid one is required).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a size cap (dense eigensolve, exact independence
// number, ball expansion). Caps are adjustable via RLAB_CAPS.
struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// A verification hypothesis does not hold for the given instance
// (graph not regular, subdegree condition violated, girth too small).
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rlab

#endif
